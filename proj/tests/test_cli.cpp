// Runs the command-line binary and checks exit codes and output files.
#include <doctest.h>

#include "cli_runner.hpp"

#include <filesystem>
#include <string>

namespace fs = std::filesystem;
using test::run_cli;
using test::slurp;

namespace {

const std::string kData = LEADERSHIP_DATA_DIR;

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / ("leadership_cli_tests_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir / name;
}

} // namespace

TEST_CASE("solve writes the threshold")
{
    const fs::path out = scratch("r.csv");
    const auto r = run_cli("solve --scenario " + kData + "/baseline.json --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("kappa_star = 0.1176470588") != std::string::npos);
    CHECK(slurp(out).find("0.1176470588") != std::string::npos);
}

TEST_CASE("validate")
{
    auto r = run_cli("validate --scenario " + kData + "/bad_eq4.json");
    CHECK(r.exit_code == 1);
    CHECK(r.stderr_text.find("Eq(4)") != std::string::npos);
    r = run_cli("validate --scenario " + kData + "/baseline.json");
    CHECK(r.exit_code == 0);
}

TEST_CASE("case-data")
{
    const fs::path out = scratch("t3.json");
    const auto r = run_cli("case-data --scenario " + kData + "/bancarization.json --format json --out " + out.string());
    CHECK(r.exit_code == 0);
    const std::string json = slurp(out);
    for (const char* rate : {"3.1", "33.8", "70.0", "73.9", "75.6", "82.6"})
        CHECK(json.find(std::string("\"rate_percent\": ") + rate) != std::string::npos);
}

TEST_CASE("sweep and simulate")
{
    const fs::path out = scratch("sweep.csv");
    auto r = run_cli("sweep --scenario " + kData + "/theta_sweep.json --out " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("Increasing") != std::string::npos);

    r = run_cli("sweep --parameter kappa_max --values 1.5,2,2.5,3");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("Decreasing") != std::string::npos);

    r = run_cli("simulate --agents 2000 --replications 3 --seed 5 --format json --out " + scratch("sim.json").string());
    CHECK(r.exit_code == 0);
    CHECK(slurp(scratch("sim.json")).find("\"mean_x\"") != std::string::npos);
}

TEST_CASE("exit codes")
{
    CHECK(run_cli("solve --bogus").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("solve --scenario " + kData + "/missing.json").exit_code == 2);
    CHECK(run_cli("solve --format xml").exit_code == 2);
    CHECK(run_cli("solve --out /nonexistent_dir/r.csv").exit_code == 2);
    CHECK(run_cli("simulate --agents 10").exit_code == 1);
    CHECK(run_cli("sweep").exit_code == 2);
    CHECK(run_cli("solve --convention paper-literal").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
}
