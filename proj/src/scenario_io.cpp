#include "leadership/scenario_io.hpp"

#include "leadership/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace leadership {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.contains(key))
            throw SchemaError(where + key, "schema: unknown field '" + where + key + "'");
    }
}

const Json& require_field(const Json& obj, const std::string& key, const std::string& where)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw SchemaError(where + key, "schema: missing required field '" + where + key + "'");
    return *it;
}

const Json& require_object(const Json& obj, const std::string& key, const std::string& where)
{
    const Json& v = require_field(obj, key, where);
    if (!v.is_object())
        throw SchemaError(where + key, "schema: field '" + where + key + "' must be an object");
    return v;
}

double read_number(const Json& v, const std::string& name)
{
    if (!v.is_number())
        throw SchemaError(name, "schema: field '" + name + "' must be a number");
    return v.get<double>();
}

std::uint64_t read_count(const Json& v, const std::string& name)
{
    if (!v.is_number_unsigned())
        throw SchemaError(name, "schema: field '" + name + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::string read_string(const Json& v, const std::string& name)
{
    if (!v.is_string())
        throw SchemaError(name, "schema: field '" + name + "' must be a string");
    return v.get<std::string>();
}

template <class Parse>
auto read_enum(const Json& obj, const std::string& key, const std::string& where, Parse parse)
    -> std::optional<typename std::invoke_result_t<Parse, std::string_view>::value_type>
{
    auto it = obj.find(key);
    if (it == obj.end())
        return std::nullopt;
    const std::string text = read_string(*it, where + key);
    auto parsed = parse(text);
    if (!parsed)
        throw SchemaError(where + key, "schema: field '" + where + key + "' has unknown value '" + text + "'");
    return parsed;
}

ModelParams read_params(const Json& obj)
{
    const std::string where = "params.";
    std::set<std::string> allowed(kNumericFields.begin(), kNumericFields.end());
    allowed.insert({"leader_type", "threshold_convention", "posterior_convention"});
    reject_unknown_keys(obj, allowed, where);

    ModelParams p;
    for (std::string_view name : kNumericFields) {
        const std::string key(name);
        *numeric_field(p, name) = read_number(require_field(obj, key, where), where + key);
    }
    if (auto v = read_enum(obj, "leader_type", where, parse_leader_type))
        p.leader_type = *v;
    if (auto v = read_enum(obj, "threshold_convention", where, parse_threshold_convention))
        p.threshold_convention = *v;
    if (auto v = read_enum(obj, "posterior_convention", where, parse_posterior_convention))
        p.posterior_convention = *v;
    return p;
}

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json params_json(const ModelParams& p)
{
    Json j;
    for (std::string_view name : kNumericFields)
        j[std::string(name)] = *numeric_field(p, name);
    j["leader_type"] = to_string(p.leader_type);
    j["threshold_convention"] = to_string(p.threshold_convention);
    j["posterior_convention"] = to_string(p.posterior_convention);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv(std::initializer_list<std::string> cells)
{
    std::string line;
    for (const std::string& c : cells) {
        if (!line.empty())
            line += ',';
        line += c;
    }
    return line + "\n";
}

std::string format_count(std::uint64_t v) { return std::to_string(v); }

std::string format_tenths(double rate)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", rate);
    return buf;
}

template <class T>
bool parse_int(std::string_view text, T& out)
{
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(std::string_view(line).substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

} // namespace

std::string_view to_string(RunKind r) noexcept
{
    switch (r) {
    case RunKind::Solve: return "solve";
    case RunKind::Simulate: return "simulate";
    case RunKind::Sweep: return "sweep";
    case RunKind::CaseData: break;
    }
    return "case-data";
}

std::optional<RunKind> parse_run_kind(std::string_view s) noexcept
{
    for (RunKind r : {RunKind::Solve, RunKind::Simulate, RunKind::Sweep, RunKind::CaseData})
        if (to_string(r) == s)
            return r;
    return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view s) noexcept
{
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    return std::nullopt;
}

Scenario parse_scenario(const std::string& text, const fs::path& base_dir)
{
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed scenario JSON: ") + e.what());
    }
    if (!root.is_object())
        throw SchemaError("", "schema: scenario must be a JSON object");
    reject_unknown_keys(root, {"label", "run", "params", "abm", "sweep", "case_data"}, "");

    Scenario sc;
    if (auto it = root.find("label"); it != root.end())
        sc.label = read_string(*it, "label");
    if (auto r = read_enum(root, "run", "", parse_run_kind))
        sc.run = *r;
    else
        throw SchemaError("run", "schema: missing required field 'run'");
    sc.params = read_params(require_object(root, "params", ""));

    const auto section_rule = [&](const char* key, RunKind owner) {
        const bool present = root.contains(key);
        if (sc.run == owner && !present)
            throw SchemaError(key, std::string("schema: run '") + std::string(to_string(owner)) +
                                       "' requires section '" + key + "'");
        if (sc.run != owner && present)
            throw SchemaError(key, std::string("schema: section '") + key + "' is only allowed with run '" +
                                       std::string(to_string(owner)) + "'");
        return present;
    };

    if (section_rule("abm", RunKind::Simulate)) {
        const Json& abm = require_object(root, "abm", "");
        reject_unknown_keys(abm, {"agents", "replications", "seed"}, "abm.");
        AbmConfig cfg;
        cfg.agents = read_count(require_field(abm, "agents", "abm."), "abm.agents");
        cfg.replications = read_count(require_field(abm, "replications", "abm."), "abm.replications");
        cfg.seed = read_count(require_field(abm, "seed", "abm."), "abm.seed");
        sc.abm = cfg;
    }
    if (section_rule("sweep", RunKind::Sweep)) {
        const Json& sw = require_object(root, "sweep", "");
        reject_unknown_keys(sw, {"parameter", "values"}, "sweep.");
        SweepConfig cfg;
        cfg.parameter_name = read_string(require_field(sw, "parameter", "sweep."), "sweep.parameter");
        if (!numeric_field(sc.params, cfg.parameter_name))
            throw SchemaError("sweep.parameter", "schema: unknown sweep parameter '" + cfg.parameter_name + "'");
        const Json& values = require_field(sw, "values", "sweep.");
        if (!values.is_array() || values.empty())
            throw SchemaError("sweep.values", "schema: field 'sweep.values' must be a non-empty array");
        for (const Json& v : values)
            cfg.values.push_back(read_number(v, "sweep.values"));
        sc.sweep = std::move(cfg);
    }
    if (section_rule("case_data", RunKind::CaseData)) {
        const Json& cd = require_object(root, "case_data", "");
        reject_unknown_keys(cd, {"path"}, "case_data.");
        fs::path p = read_string(require_field(cd, "path", "case_data."), "case_data.path");
        if (p.is_relative())
            p = fs::absolute(base_dir.empty() ? p : base_dir / p);
        sc.case_data = CaseDataConfig{p.lexically_normal()};
    }

    validate_params(sc.params);
    return sc;
}

Scenario load_scenario(const fs::path& path)
{
    return parse_scenario(read_file(path), path.parent_path());
}

std::string scenario_to_json(const Scenario& sc)
{
    Json j;
    j["label"] = sc.label;
    j["run"] = to_string(sc.run);
    j["params"] = params_json(sc.params);
    if (sc.abm)
        j["abm"] = {{"agents", sc.abm->agents}, {"replications", sc.abm->replications}, {"seed", sc.abm->seed}};
    if (sc.sweep)
        j["sweep"] = {{"parameter", sc.sweep->parameter_name}, {"values", sc.sweep->values}};
    if (sc.case_data)
        j["case_data"] = {{"path", sc.case_data->path.string()}};
    return dump(j);
}

void write_scenario(const Scenario& scenario, const fs::path& path)
{
    write_text(path, scenario_to_json(scenario));
}

std::uint64_t rate_tenths_half_up(std::uint64_t banked, std::uint64_t total)
{
    if (total == 0)
        throw DomainError("rate_tenths_half_up: total is zero");
    // floor(1000 * banked / total + 1/2)
    return (2000 * banked + total) / (2 * total);
}

std::vector<BancarizationSeries> ingest_case_table(const fs::path& path)
{
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t row = 0;
    bool have_header = false;
    bool with_printed = false;
    std::vector<BancarizationSeries> out;

    while (std::getline(in, line)) {
        if (trim(line).empty())
            continue;
        const auto cells = split_csv(line);
        if (!have_header) {
            const bool base = cells.size() >= 3 && cells[0] == "year" && cells[1] == "banked_count" &&
                              cells[2] == "total_active";
            with_printed = cells.size() == 4 && cells[3] == "printed_rate_percent";
            if (!base || (cells.size() == 4 && !with_printed) || cells.size() > 4)
                throw ParseError(path.string() +
                                 ": header must be year,banked_count,total_active[,printed_rate_percent]");
            have_header = true;
            continue;
        }
        ++row;
        const std::string where = path.string() + ": row " + std::to_string(row) + ": ";
        if (cells.size() != (with_printed ? 4u : 3u))
            throw ParseError(where + "expected " + std::to_string(with_printed ? 4 : 3) + " columns");

        BancarizationSeries r;
        if (!parse_int(cells[0], r.year) || !parse_int(cells[1], r.banked_count) ||
            !parse_int(cells[2], r.total_active))
            throw ParseError(where + "malformed integer field");
        if (r.total_active == 0)
            throw ValidationError(Constraint::Interval, "total_active", where + "total_active is zero");
        if (r.banked_count > r.total_active)
            throw ValidationError(Constraint::Interval, "banked_count", where + "banked_count exceeds total_active");

        r.raw_rate_percent = 100.0 * static_cast<double>(r.banked_count) / static_cast<double>(r.total_active);
        const std::uint64_t tenths = rate_tenths_half_up(r.banked_count, r.total_active);
        r.rate_percent = static_cast<double>(tenths) / 10.0;

        if (with_printed) {
            double printed = 0.0;
            const std::string& cell = cells[3];
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), printed);
            if (ec != std::errc{} || ptr != cell.data() + cell.size())
                throw ParseError(where + "malformed printed_rate_percent");
            r.printed_rate_percent = printed;
            if (static_cast<std::uint64_t>(std::llround(printed * 10.0)) != tenths)
                throw ValidationError(Constraint::Interval, "printed_rate_percent",
                                      where + "computed rate " + format_tenths(r.rate_percent) +
                                          " does not reproduce printed rate " + cell);
        }
        out.push_back(r);
    }
    if (!have_header)
        throw ParseError(path.string() + ": empty case table");
    return out;
}

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string render(const EquilibriumReport& report, OutputFormat format)
{
    const EquilibriumResult& e = report.equilibrium;
    if (format == OutputFormat::Csv) {
        return csv({"convention", "kappa_star", "x_star", "psi_star", "effective_gain", "iterations", "residual",
                    "closed_form_gap"}) +
               csv({std::string(to_string(e.convention)), format_number(e.kappa_star), format_number(e.x_star),
                    format_number(e.psi_star), format_number(e.effective_gain), format_count(e.iterations),
                    format_number(e.residual), format_number(e.closed_form_gap)});
    }
    Json j;
    j["equilibrium"] = {{"kappa_star", e.kappa_star},
                        {"x_star", e.x_star},
                        {"expected_participation", e.expected_participation},
                        {"psi_star", e.psi_star},
                        {"effective_gain", e.effective_gain},
                        {"convention", to_string(e.convention)},
                        {"iterations", e.iterations},
                        {"residual", e.residual},
                        {"closed_form_gap", e.closed_form_gap}};
    j["costs"] = {{"info_effort", report.costs.info_effort},
                  {"info_cost", report.costs.info_cost},
                  {"partisan_cost", report.costs.partisan_cost}};
    return dump(j);
}

std::string render(const SweepSeries& series, OutputFormat format)
{
    if (format == OutputFormat::Csv) {
        std::string out = csv({"parameter", "value", "kappa_star", "x_star", "psi_star"});
        for (std::size_t i = 0; i < series.values.size(); ++i) {
            const SweepPoint& p = series.outputs[i];
            out += csv({series.parameter_name, format_number(series.values[i]), format_number(p.kappa_star),
                        format_number(p.x_star), format_number(p.psi_star)});
        }
        return out;
    }
    Json outputs = Json::array();
    for (const SweepPoint& p : series.outputs)
        outputs.push_back({{"kappa_star", p.kappa_star}, {"x_star", p.x_star}, {"psi_star", p.psi_star}});
    Json skipped = Json::array();
    for (const SkippedPoint& s : series.skipped)
        skipped.push_back({{"value", s.value}, {"reason", s.reason}});
    Json j;
    j["parameter_name"] = series.parameter_name;
    j["values"] = series.values;
    j["outputs"] = std::move(outputs);
    j["monotonicity"] = to_string(series.monotonicity);
    j["skipped"] = std::move(skipped);
    return dump(j);
}

std::string render(const AbmEstimate& e, OutputFormat format)
{
    if (format == OutputFormat::Csv) {
        return csv({"mean_x", "stderr_x", "mean_success_rate", "replications", "agents_per_replication",
                    "analytic_x", "abs_gap"}) +
               csv({format_number(e.mean_x), format_number(e.stderr_x), format_number(e.mean_success_rate),
                    format_count(e.replications), format_count(e.agents_per_replication),
                    format_number(e.analytic_x), format_number(e.abs_gap)});
    }
    Json j;
    j["mean_x"] = e.mean_x;
    j["stderr_x"] = e.stderr_x;
    j["mean_success_rate"] = e.mean_success_rate;
    j["replications"] = e.replications;
    j["agents_per_replication"] = e.agents_per_replication;
    j["analytic_x"] = e.analytic_x;
    j["abs_gap"] = e.abs_gap;
    return dump(j);
}

std::string render(const std::vector<BancarizationSeries>& table, OutputFormat format)
{
    if (format == OutputFormat::Csv) {
        std::string out = csv({"year", "banked_count", "total_active", "rate_percent"});
        for (const BancarizationSeries& r : table)
            out += csv({std::to_string(r.year), format_count(r.banked_count), format_count(r.total_active),
                        format_tenths(r.rate_percent)});
        return out;
    }
    Json j = Json::array();
    for (const BancarizationSeries& r : table) {
        Json row;
        row["year"] = r.year;
        row["banked_count"] = r.banked_count;
        row["total_active"] = r.total_active;
        row["rate_percent"] = r.rate_percent;
        j.push_back(std::move(row));
    }
    return dump(j);
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("write to '" + path.string() + "' failed");
}

} // namespace leadership
