// Command-line front end. Talks to the model only through the C interface.
//
//   leadership solve     [--scenario PATH] [--out PATH] [--format csv|json]
//   leadership simulate  [--agents N] [--replications R] [--seed U64] ...
//   leadership sweep     [--parameter NAME --values v1,v2,...] ...
//   leadership validate  --scenario PATH
//   leadership case-data [--scenario PATH | --table PATH] ...
//
// Exit codes: 0 success, 1 validation error, 2 I/O / parse / usage error,
// 3 internal or solver error.

#include "leadership/leadership.h"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kValidation = 1, kInput = 2, kInternal = 3 };

int exit_code(ldr_status s)
{
    switch (s) {
    case LDR_OK: return kOk;
    case LDR_ERR_VALIDATION:
    case LDR_ERR_DOMAIN: return kValidation;
    case LDR_ERR_PARSE:
    case LDR_ERR_SCHEMA:
    case LDR_ERR_IO:
    case LDR_ERR_ARGUMENT: return kInput;
    case LDR_ERR_SOLVER:
    case LDR_ERR_INTERNAL: return kInternal;
    }
    return kInternal;
}

struct ScenarioDeleter {
    void operator()(ldr_scenario* s) const { ldr_scenario_free(s); }
};
struct ResultDeleter {
    void operator()(ldr_result* r) const { ldr_result_free(r); }
};
using ScenarioPtr = std::unique_ptr<ldr_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<ldr_result, ResultDeleter>;

struct Options {
    std::string scenario;
    std::string out;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
    std::optional<std::string> convention;
    std::optional<std::string> posterior;
    std::optional<std::uint64_t> agents;
    std::optional<std::uint64_t> replications;
    std::string parameter;
    std::vector<double> values;
    std::string table;
};

int report(ldr_status s)
{
    std::cerr << "error (" << ldr_status_name(s) << "): " << ldr_last_error() << "\n";
    return exit_code(s);
}

class Runner {
public:
    explicit Runner(const Options& opt) : opt_(opt) {}

    int load()
    {
        ldr_scenario* raw = nullptr;
        const ldr_status s = opt_.scenario.empty() ? ldr_scenario_new(&raw) : ldr_scenario_load(opt_.scenario.c_str(), &raw);
        if (s != LDR_OK)
            return report(s);
        scenario_.reset(raw);
        if (opt_.convention)
            if (auto st = ldr_scenario_set_option(raw, "threshold_convention", opt_.convention->c_str()); st != LDR_OK)
                return report(st);
        if (opt_.posterior)
            if (auto st = ldr_scenario_set_option(raw, "posterior_convention", opt_.posterior->c_str()); st != LDR_OK)
                return report(st);
        return kOk;
    }

    ldr_scenario* scenario() const { return scenario_.get(); }

    int finish(ldr_status s, ldr_result* raw)
    {
        if (s != LDR_OK)
            return report(s);
        ResultPtr result(raw);
        std::cout << ldr_result_summary(result.get());
        if (!opt_.out.empty()) {
            const ldr_format f = opt_.format == "json" ? LDR_FORMAT_JSON : LDR_FORMAT_CSV;
            if (auto st = ldr_result_write(result.get(), opt_.out.c_str(), f); st != LDR_OK)
                return report(st);
            std::cout << "wrote " << opt_.out << "\n";
        }
        return kOk;
    }

private:
    const Options& opt_;
    ScenarioPtr scenario_;
};

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--scenario", opt.scenario, "Scenario JSON file");
    cmd->add_option("--out", opt.out, "Write machine-readable results to this file");
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opt.seed, "Master seed for simulations");
    cmd->add_option("--convention", opt.convention, "Closed-form threshold convention")
        ->check(CLI::IsMember({"paper-literal", "derived-consistent"}));
    cmd->add_option("--posterior", opt.posterior, "Posterior convention")->check(CLI::IsMember({"paper", "bayes"}));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Leadership and reform participation model"};
    app.require_subcommand(1);
    Options opt;

    auto* solve = app.add_subcommand("solve", "Solve the participation equilibrium");
    auto* simulate = app.add_subcommand("simulate", "Estimate equilibrium participation by agent-based simulation");
    auto* sweep = app.add_subcommand("sweep", "Comparative statics over one parameter");
    auto* validate = app.add_subcommand("validate", "Check a scenario against the model constraints");
    auto* case_data = app.add_subcommand("case-data", "Ingest the bancarization case table");
    for (auto* cmd : {solve, simulate, sweep, validate, case_data})
        add_common(cmd, opt);
    simulate->add_option("--agents", opt.agents, "Agents per replication");
    simulate->add_option("--replications", opt.replications, "Number of replications");
    sweep->add_option("--parameter", opt.parameter, "Parameter to vary");
    sweep->add_option("--values", opt.values, "Grid values")->delimiter(',');
    case_data->add_option("--table", opt.table, "Case table CSV (overrides the scenario)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kInput;
    }

    Runner runner(opt);
    if (int rc = runner.load(); rc != kOk)
        return rc;
    ldr_scenario* sc = runner.scenario();
    ldr_result* result = nullptr;

    if (validate->parsed()) {
        if (auto st = ldr_scenario_validate(sc); st != LDR_OK)
            return report(st);
        std::cout << "scenario is valid\n";
        return kOk;
    }
    if (solve->parsed()) {
        const ldr_status st = ldr_solve(sc, &result);
        return runner.finish(st, result);
    }
    if (simulate->parsed()) {
        if (opt.agents || opt.replications || opt.seed) {
            std::uint64_t agents = 0, reps = 0, seed = 0;
            ldr_scenario_get_abm(sc, &agents, &reps, &seed);
            ldr_scenario_set_abm(sc, opt.agents.value_or(agents), opt.replications.value_or(reps),
                                 opt.seed.value_or(seed));
        }
        const ldr_status st = ldr_simulate(sc, &result);
        return runner.finish(st, result);
    }
    if (sweep->parsed()) {
        if (!opt.parameter.empty()) {
            if (auto st = ldr_scenario_set_sweep(sc, opt.parameter.c_str(), opt.values.data(), opt.values.size());
                st != LDR_OK)
                return report(st);
        }
        const ldr_status st = ldr_sweep(sc, &result);
        return runner.finish(st, result);
    }
    if (case_data->parsed()) {
        if (!opt.table.empty())
            if (auto st = ldr_scenario_set_case_data(sc, opt.table.c_str()); st != LDR_OK)
                return report(st);
        const ldr_status st = ldr_case_data(sc, &result);
        return runner.finish(st, result);
    }
    return kInput;
}
