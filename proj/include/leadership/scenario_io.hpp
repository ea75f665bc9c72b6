#ifndef LEADERSHIP_SCENARIO_IO_HPP
#define LEADERSHIP_SCENARIO_IO_HPP

// Scenario files, result persistence and the case-study data path.
//
// Scenario JSON (all numbers decimal, unknown keys rejected):
//
//   {
//     "label": "baseline",
//     "run": "solve" | "simulate" | "sweep" | "case-data",
//     "params": { "a": 0.5, "phi": 2, ..., "leader_type": "NonPartisan",
//                 "threshold_convention": "DerivedConsistent",
//                 "posterior_convention": "PaperEq6" },
//     "abm":       { "agents": 100000, "replications": 20, "seed": 42 },  // run = simulate
//     "sweep":     { "parameter": "theta", "values": [0.1, 0.2] },        // run = sweep
//     "case_data": { "path": "bancarization.csv" }                        // run = case-data
//   }
//
// Each run-specific section is required for its run and rejected otherwise.
// The three enum fields of "params" are optional and default to
// NonPartisan / DerivedConsistent / PaperEq6.

#include "leadership/abm.hpp"
#include "leadership/equilibrium.hpp"
#include "leadership/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace leadership {

enum class RunKind { Solve, Simulate, Sweep, CaseData };

std::string_view to_string(RunKind r) noexcept;
std::optional<RunKind> parse_run_kind(std::string_view s) noexcept;

struct AbmConfig {
    std::size_t agents = 100'000;
    std::size_t replications = 20;
    std::uint64_t seed = 42;

    friend bool operator==(const AbmConfig&, const AbmConfig&) = default;
};

struct SweepConfig {
    std::string parameter_name;
    std::vector<double> values;

    friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

struct CaseDataConfig {
    std::filesystem::path path; ///< relative paths resolve against the scenario file

    friend bool operator==(const CaseDataConfig&, const CaseDataConfig&) = default;
};

struct Scenario {
    ModelParams params;
    RunKind run = RunKind::Solve;
    std::optional<AbmConfig> abm;
    std::optional<SweepConfig> sweep;
    std::optional<CaseDataConfig> case_data;
    std::string label;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Parses and validates a scenario file. Throws IoError, ParseError,
/// SchemaError (naming the field) or ValidationError.
Scenario load_scenario(const std::filesystem::path& path);

/// Same as load_scenario for in-memory text; relative case-data paths
/// resolve against `base_dir`.
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir = {});

/// Serializes a scenario so that parse_scenario reproduces it exactly.
std::string scenario_to_json(const Scenario& scenario);
void write_scenario(const Scenario& scenario, const std::filesystem::path& path);

struct BancarizationSeries {
    int year = 0;
    std::uint64_t banked_count = 0;
    std::uint64_t total_active = 0;
    double rate_percent = 0.0;      ///< rounded half-up to one decimal
    double raw_rate_percent = 0.0;  ///< 100 * banked / total before rounding
    std::optional<double> printed_rate_percent;
};

/// Reads `year,banked_count,total_active[,printed_rate_percent]` rows.
/// When the printed column is present each computed rate must reproduce it.
/// Errors carry the 1-based data row number.
std::vector<BancarizationSeries> ingest_case_table(const std::filesystem::path& path);

/// Rate in tenths of a percent, rounded half-up, in exact integer arithmetic.
std::uint64_t rate_tenths_half_up(std::uint64_t banked, std::uint64_t total);

enum class OutputFormat { Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view s) noexcept;

/// `%.12g` rendering used in every CSV cell.
std::string format_number(double v);

// Renderers. Output never contains timestamps, so equal inputs give equal bytes.
std::string render(const EquilibriumReport& report, OutputFormat format);
std::string render(const SweepSeries& series, OutputFormat format);
std::string render(const AbmEstimate& estimate, OutputFormat format);
std::string render(const std::vector<BancarizationSeries>& table, OutputFormat format);

template <class Result>
void write_results(const Result& result, const std::filesystem::path& path, OutputFormat format);

/// Writes `text` to `path`, throwing IoError with the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

template <class Result>
void write_results(const Result& result, const std::filesystem::path& path, OutputFormat format)
{
    write_text(path, render(result, format));
}

} // namespace leadership

#endif
