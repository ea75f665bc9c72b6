#include "leadership/leadership.h"

#include "leadership/errors.hpp"
#include "leadership/scenario_io.hpp"

#include <cstdio>
#include <new>
#include <optional>
#include <string>
#include <variant>

using namespace leadership;

struct ldr_scenario {
    Scenario scenario;
};

struct ldr_result {
    std::variant<EquilibriumReport, AbmEstimate, SweepSeries, std::vector<BancarizationSeries>> value;
    std::string summary;
    mutable std::string rendered;
};

namespace {

thread_local std::string last_error;

ldr_status fail(ldr_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Runs `body`, translating library exceptions into status codes.
template <class Body>
ldr_status guarded(Body&& body) noexcept
{
    try {
        return body();
    } catch (const ValidationError& e) {
        return fail(LDR_ERR_VALIDATION, e.what());
    } catch (const DomainError& e) {
        return fail(LDR_ERR_DOMAIN, e.what());
    } catch (const ParseError& e) {
        return fail(LDR_ERR_PARSE, e.what());
    } catch (const SchemaError& e) {
        return fail(LDR_ERR_SCHEMA, e.what());
    } catch (const IoError& e) {
        return fail(LDR_ERR_IO, e.what());
    } catch (const ConvergenceError& e) {
        return fail(LDR_ERR_SOLVER, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LDR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LDR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LDR_ERR_INTERNAL, "unknown error");
    }
}

ldr_status null_argument(const char* what)
{
    return fail(LDR_ERR_ARGUMENT, std::string(what) + " is null");
}

std::string line(const char* name, double v)
{
    return std::string(name) + " = " + format_number(v) + "\n";
}

std::string summarize(const EquilibriumReport& r)
{
    const EquilibriumResult& e = r.equilibrium;
    return std::string("convention = ") + std::string(to_string(e.convention)) + "\n" +
           line("kappa_star", e.kappa_star) + line("x_star", e.x_star) + line("psi_star", e.psi_star) +
           line("effective_gain", e.effective_gain) + "iterations = " + std::to_string(e.iterations) + "\n" +
           line("closed_form_gap", e.closed_form_gap) + line("info_effort", r.costs.info_effort) +
           line("info_cost", r.costs.info_cost) + line("partisan_cost", r.costs.partisan_cost);
}

std::string summarize(const AbmEstimate& e)
{
    return "replications = " + std::to_string(e.replications) + " x " + std::to_string(e.agents_per_replication) +
           " agents\n" + line("mean_x", e.mean_x) + line("stderr_x", e.stderr_x) +
           line("mean_success_rate", e.mean_success_rate) + line("analytic_x", e.analytic_x) +
           line("abs_gap", e.abs_gap);
}

std::string summarize(const SweepSeries& s)
{
    std::string out = "parameter = " + s.parameter_name + " (" + std::to_string(s.values.size()) + " points, " +
                      std::to_string(s.skipped.size()) + " skipped)\n";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        out += "  " + format_number(s.values[i]) + " -> kappa_star " + format_number(s.outputs[i].kappa_star) +
               ", x_star " + format_number(s.outputs[i].x_star) + "\n";
    for (const SkippedPoint& p : s.skipped)
        out += "  skipped " + format_number(p.value) + ": " + p.reason + "\n";
    out += "kappa_star is " + std::string(to_string(s.monotonicity)) + "\n";
    return out;
}

std::string summarize(const std::vector<BancarizationSeries>& table)
{
    std::string out;
    for (const BancarizationSeries& r : table) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d: %llu / %llu = %.1f%%\n", r.year,
                      static_cast<unsigned long long>(r.banked_count),
                      static_cast<unsigned long long>(r.total_active), r.rate_percent);
        out += buf;
    }
    return out;
}

template <class T>
ldr_status emit(T value, ldr_result** out)
{
    auto* r = new ldr_result{std::move(value), {}, {}};
    r->summary = std::visit([](const auto& v) { return summarize(v); }, r->value);
    *out = r;
    return LDR_OK;
}

std::optional<double> equilibrium_field(const EquilibriumReport& r, std::string_view f)
{
    const EquilibriumResult& e = r.equilibrium;
    if (f == "kappa_star") return e.kappa_star;
    if (f == "x_star") return e.x_star;
    if (f == "expected_participation") return e.expected_participation;
    if (f == "psi_star") return e.psi_star;
    if (f == "effective_gain") return e.effective_gain;
    if (f == "iterations") return static_cast<double>(e.iterations);
    if (f == "residual") return e.residual;
    if (f == "closed_form_gap") return e.closed_form_gap;
    if (f == "info_effort") return r.costs.info_effort;
    if (f == "info_cost") return r.costs.info_cost;
    if (f == "partisan_cost") return r.costs.partisan_cost;
    return std::nullopt;
}

std::optional<double> abm_field(const AbmEstimate& e, std::string_view f)
{
    if (f == "mean_x") return e.mean_x;
    if (f == "stderr_x") return e.stderr_x;
    if (f == "mean_success_rate") return e.mean_success_rate;
    if (f == "replications") return static_cast<double>(e.replications);
    if (f == "agents_per_replication") return static_cast<double>(e.agents_per_replication);
    if (f == "analytic_x") return e.analytic_x;
    if (f == "abs_gap") return e.abs_gap;
    return std::nullopt;
}

std::optional<double> sweep_field(const SweepSeries& s, std::string_view f, std::size_t row)
{
    if (f == "value") return s.values[row];
    if (f == "kappa_star") return s.outputs[row].kappa_star;
    if (f == "x_star") return s.outputs[row].x_star;
    if (f == "psi_star") return s.outputs[row].psi_star;
    return std::nullopt;
}

std::optional<double> case_field(const BancarizationSeries& r, std::string_view f)
{
    if (f == "year") return r.year;
    if (f == "banked_count") return static_cast<double>(r.banked_count);
    if (f == "total_active") return static_cast<double>(r.total_active);
    if (f == "rate_percent") return r.rate_percent;
    if (f == "raw_rate_percent") return r.raw_rate_percent;
    return std::nullopt;
}

} // namespace

extern "C" {

const char* ldr_version(void) { return "1.0.0"; }

const char* ldr_last_error(void) { return last_error.c_str(); }

const char* ldr_status_name(ldr_status status)
{
    switch (status) {
    case LDR_OK: return "ok";
    case LDR_ERR_VALIDATION: return "validation error";
    case LDR_ERR_DOMAIN: return "domain error";
    case LDR_ERR_PARSE: return "parse error";
    case LDR_ERR_SCHEMA: return "schema error";
    case LDR_ERR_IO: return "I/O error";
    case LDR_ERR_SOLVER: return "solver error";
    case LDR_ERR_ARGUMENT: return "invalid argument";
    case LDR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

ldr_status ldr_scenario_load(const char* path, ldr_scenario** out)
{
    if (!path) return null_argument("path");
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = new ldr_scenario{load_scenario(path)};
        return LDR_OK;
    });
}

ldr_status ldr_scenario_new(ldr_scenario** out)
{
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = new ldr_scenario{};
        (*out)->scenario.label = "baseline";
        return LDR_OK;
    });
}

void ldr_scenario_free(ldr_scenario* scenario) { delete scenario; }

ldr_status ldr_scenario_set_param(ldr_scenario* scenario, const char* name, double value)
{
    if (!scenario) return null_argument("scenario");
    if (!name) return null_argument("name");
    double* field = numeric_field(scenario->scenario.params, name);
    if (!field)
        return fail(LDR_ERR_ARGUMENT, std::string("unknown parameter '") + name + "'");
    *field = value;
    return LDR_OK;
}

ldr_status ldr_scenario_get_param(const ldr_scenario* scenario, const char* name, double* out)
{
    if (!scenario) return null_argument("scenario");
    if (!name) return null_argument("name");
    if (!out) return null_argument("out");
    const double* field = numeric_field(scenario->scenario.params, name);
    if (!field)
        return fail(LDR_ERR_ARGUMENT, std::string("unknown parameter '") + name + "'");
    *out = *field;
    return LDR_OK;
}

ldr_status ldr_scenario_set_option(ldr_scenario* scenario, const char* name, const char* value)
{
    if (!scenario) return null_argument("scenario");
    if (!name) return null_argument("name");
    if (!value) return null_argument("value");
    const std::string_view key = name;
    Scenario& sc = scenario->scenario;
    const auto bad = [&] {
        return fail(LDR_ERR_ARGUMENT, std::string("invalid value '") + value + "' for option '" + name + "'");
    };
    if (key == "leader_type") {
        auto v = parse_leader_type(value);
        if (!v) return bad();
        sc.params.leader_type = *v;
    } else if (key == "threshold_convention") {
        auto v = parse_threshold_convention(value);
        if (!v) return bad();
        sc.params.threshold_convention = *v;
    } else if (key == "posterior_convention") {
        auto v = parse_posterior_convention(value);
        if (!v) return bad();
        sc.params.posterior_convention = *v;
    } else if (key == "run") {
        auto v = parse_run_kind(value);
        if (!v) return bad();
        sc.run = *v;
    } else if (key == "label") {
        sc.label = value;
    } else {
        return fail(LDR_ERR_ARGUMENT, std::string("unknown option '") + name + "'");
    }
    return LDR_OK;
}

ldr_status ldr_scenario_set_abm(ldr_scenario* scenario, uint64_t agents, uint64_t replications, uint64_t seed)
{
    if (!scenario) return null_argument("scenario");
    scenario->scenario.abm = AbmConfig{agents, replications, seed};
    return LDR_OK;
}

ldr_status ldr_scenario_get_abm(const ldr_scenario* scenario, uint64_t* agents, uint64_t* replications,
                                uint64_t* seed)
{
    if (!scenario) return null_argument("scenario");
    if (!agents || !replications || !seed) return null_argument("out");
    const AbmConfig cfg = scenario->scenario.abm.value_or(AbmConfig{});
    *agents = cfg.agents;
    *replications = cfg.replications;
    *seed = cfg.seed;
    return LDR_OK;
}

ldr_status ldr_scenario_set_sweep(ldr_scenario* scenario, const char* parameter, const double* values, size_t count)
{
    if (!scenario) return null_argument("scenario");
    if (!parameter) return null_argument("parameter");
    if (!values && count > 0) return null_argument("values");
    if (!numeric_field(scenario->scenario.params, parameter))
        return fail(LDR_ERR_ARGUMENT, std::string("unknown parameter '") + parameter + "'");
    return guarded([&] {
        scenario->scenario.sweep = SweepConfig{parameter, std::vector<double>(values, values + count)};
        return LDR_OK;
    });
}

ldr_status ldr_scenario_set_case_data(ldr_scenario* scenario, const char* path)
{
    if (!scenario) return null_argument("scenario");
    if (!path) return null_argument("path");
    return guarded([&] {
        scenario->scenario.case_data = CaseDataConfig{path};
        return LDR_OK;
    });
}

ldr_status ldr_scenario_validate(const ldr_scenario* scenario)
{
    if (!scenario) return null_argument("scenario");
    return guarded([&] {
        validate_params(scenario->scenario.params);
        return LDR_OK;
    });
}

ldr_status ldr_scenario_save(const ldr_scenario* scenario, const char* path)
{
    if (!scenario) return null_argument("scenario");
    if (!path) return null_argument("path");
    return guarded([&] {
        write_scenario(scenario->scenario, path);
        return LDR_OK;
    });
}

ldr_status ldr_solve(const ldr_scenario* scenario, ldr_result** out)
{
    if (!scenario) return null_argument("scenario");
    if (!out) return null_argument("out");
    return guarded([&] { return emit(equilibrium_report(scenario->scenario.params), out); });
}

ldr_status ldr_simulate(const ldr_scenario* scenario, ldr_result** out)
{
    if (!scenario) return null_argument("scenario");
    if (!out) return null_argument("out");
    return guarded([&] {
        const AbmConfig cfg = scenario->scenario.abm.value_or(AbmConfig{});
        return emit(estimate_equilibrium(scenario->scenario.params, cfg.agents, cfg.replications, cfg.seed), out);
    });
}

ldr_status ldr_sweep(const ldr_scenario* scenario, ldr_result** out)
{
    if (!scenario) return null_argument("scenario");
    if (!out) return null_argument("out");
    if (!scenario->scenario.sweep)
        return fail(LDR_ERR_SCHEMA, "schema: scenario has no 'sweep' section");
    return guarded([&] {
        const SweepConfig& cfg = *scenario->scenario.sweep;
        return emit(grid_sweep(scenario->scenario.params, cfg.parameter_name, cfg.values), out);
    });
}

ldr_status ldr_case_data(const ldr_scenario* scenario, ldr_result** out)
{
    if (!scenario) return null_argument("scenario");
    if (!out) return null_argument("out");
    if (!scenario->scenario.case_data)
        return fail(LDR_ERR_SCHEMA, "schema: scenario has no 'case_data' section");
    return guarded([&] { return emit(ingest_case_table(scenario->scenario.case_data->path), out); });
}

void ldr_result_free(ldr_result* result) { delete result; }

ldr_result_kind ldr_result_get_kind(const ldr_result* result)
{
    return result ? static_cast<ldr_result_kind>(result->value.index()) : LDR_RESULT_EQUILIBRIUM;
}

const char* ldr_result_summary(const ldr_result* result) { return result ? result->summary.c_str() : ""; }

ldr_status ldr_result_render(const ldr_result* result, ldr_format format, const char** out)
{
    if (!result) return null_argument("result");
    if (!out) return null_argument("out");
    return guarded([&] {
        const OutputFormat f = format == LDR_FORMAT_JSON ? OutputFormat::Json : OutputFormat::Csv;
        result->rendered = std::visit([&](const auto& v) { return render(v, f); }, result->value);
        *out = result->rendered.c_str();
        return LDR_OK;
    });
}

ldr_status ldr_result_write(const ldr_result* result, const char* path, ldr_format format)
{
    if (!result) return null_argument("result");
    if (!path) return null_argument("path");
    return guarded([&] {
        const OutputFormat f = format == LDR_FORMAT_JSON ? OutputFormat::Json : OutputFormat::Csv;
        std::visit([&](const auto& v) { write_results(v, path, f); }, result->value);
        return LDR_OK;
    });
}

size_t ldr_result_rows(const ldr_result* result)
{
    if (!result)
        return 0;
    if (const auto* s = std::get_if<SweepSeries>(&result->value))
        return s->values.size();
    if (const auto* t = std::get_if<std::vector<BancarizationSeries>>(&result->value))
        return t->size();
    return 1;
}

ldr_status ldr_result_get(const ldr_result* result, const char* field, size_t row, double* out)
{
    if (!result) return null_argument("result");
    if (!field) return null_argument("field");
    if (!out) return null_argument("out");
    if (row >= ldr_result_rows(result))
        return fail(LDR_ERR_ARGUMENT, "row " + std::to_string(row) + " out of range");

    std::optional<double> v;
    if (const auto* r = std::get_if<EquilibriumReport>(&result->value))
        v = equilibrium_field(*r, field);
    else if (const auto* e = std::get_if<AbmEstimate>(&result->value))
        v = abm_field(*e, field);
    else if (const auto* s = std::get_if<SweepSeries>(&result->value))
        v = sweep_field(*s, field, row);
    else
        v = case_field(std::get<std::vector<BancarizationSeries>>(result->value)[row], field);
    if (!v)
        return fail(LDR_ERR_ARGUMENT, std::string("unknown result field '") + field + "'");
    *out = *v;
    return LDR_OK;
}

ldr_status ldr_success_probability(double a, double phi, double x, double* out)
{
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = success_probability(a, phi, x);
        return LDR_OK;
    });
}

ldr_status ldr_posterior_change_state(double s, double p2, ldr_posterior convention, double* out)
{
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = posterior_change_state(s, p2,
                                      convention == LDR_POSTERIOR_BAYES ? PosteriorConvention::BayesConsistent
                                                                        : PosteriorConvention::PaperEq6);
        return LDR_OK;
    });
}

ldr_status ldr_info_acquisition_cost(double q, double pi, double* out)
{
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = info_acquisition_cost(q, pi);
        return LDR_OK;
    });
}

ldr_status ldr_partisan_participation_cost(double w, double theta, double* out)
{
    if (!out) return null_argument("out");
    return guarded([&] {
        *out = partisan_participation_cost(w, theta);
        return LDR_OK;
    });
}

} // extern "C"
