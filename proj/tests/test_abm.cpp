#include "leadership/abm.hpp"
#include "leadership/equilibrium.hpp"
#include "leadership/errors.hpp"
#include "leadership/rng.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

using namespace leadership;

namespace {

constexpr SimulateOptions kForcedE3Call{WorldState::E3, true};

/// Kolmogorov-Smirnov distance between a sample and Uniform[0, hi].
double ks_uniform(std::vector<double> xs, double hi)
{
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = xs[i] / hi;
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

} // namespace

TEST_CASE("rng")
{
    Rng a(5), b(5), c(6);
    for (int i = 0; i < 100; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(a.uniform() != c.uniform());
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(9, 3) == derive_seed(9, 3));
}

TEST_CASE("spawn_population")
{
    ModelParams p = test::baseline();

    SUBCASE("degenerate mixture")
    {
        p.theta = 1.0;
        const Population pop = spawn_population(4, p, 1);
        CHECK(pop.agents.size() == 4);
        for (const Agent& a : pop.agents) {
            CHECK(a.is_follower);
            CHECK(a.cost == 0.0);
        }
    }
    SUBCASE("determinism")
    {
        CHECK(spawn_population(1000, p, 77) == spawn_population(1000, p, 77));
        CHECK_FALSE(spawn_population(1000, p, 77) == spawn_population(1000, p, 78));
    }
    SUBCASE("agent invariants")
    {
        const Population pop = spawn_population(5000, p, 3);
        for (const Agent& a : pop.agents) {
            if (a.is_follower)
                CHECK(a.cost == 0.0);
            CHECK(a.cost >= 0.0);
            CHECK(a.cost <= p.kappa_max);
        }
    }
    SUBCASE("cost distribution is uniform (KS at the 1% level)")
    {
        p.theta = 0.0;
        const std::size_t n = 100000;
        const Population pop = spawn_population(n, p, 2024);
        std::vector<double> costs;
        for (const Agent& a : pop.agents)
            costs.push_back(a.cost);
        const double critical = 1.628 / std::sqrt(static_cast<double>(n));
        CHECK(ks_uniform(costs, p.kappa_max) < critical);
    }
    SUBCASE("mixture shares")
    {
        const Population pop = spawn_population(100000, p, 99);
        const auto followers = std::count_if(pop.agents.begin(), pop.agents.end(), [](auto& a) { return a.is_follower; });
        const auto reached = std::count_if(pop.agents.begin(), pop.agents.end(), [](auto& a) { return a.reached; });
        CHECK(followers / 1e5 == doctest::Approx(0.2).epsilon(0.03));
        CHECK(reached / 1e5 == doctest::Approx(0.8).epsilon(0.01));
    }
    CHECK_THROWS_AS(spawn_population(0, p, 1), DomainError);
}

TEST_CASE("realize_world")
{
    for (std::uint64_t s = 0; s < 200; ++s) {
        CHECK(realize_world(1.0, 0.7, s) == WorldState::E1);
        CHECK(realize_world(0.0, 1.0, s) == WorldState::E2);
        CHECK(realize_world(0.0, 0.0, s) == WorldState::E3);
    }
    std::array<int, 3> counts{};
    const int draws = 100000;
    for (int i = 0; i < draws; ++i)
        ++counts[static_cast<int>(realize_world(0.3, 0.4, derive_seed(31, i)))];
    CHECK(std::abs(counts[0] / double(draws) - 0.30) < 0.01);
    CHECK(std::abs(counts[1] / double(draws) - 0.28) < 0.01);
    CHECK(std::abs(counts[2] / double(draws) - 0.42) < 0.01);
    CHECK(realize_world(0.3, 0.4, 5) == realize_world(0.3, 0.4, 5));
}

TEST_CASE("simulate_once")
{
    ModelParams p = test::baseline();

    SUBCASE("zero-cost population joins when reached")
    {
        p.theta = 1.0;
        Population pop = spawn_population(20000, p, 4);
        const SimOutcome o = simulate_once(pop, p, 8, kForcedE3Call);
        const auto reached = std::count_if(pop.agents.begin(), pop.agents.end(), [](auto& a) { return a.reached; });
        CHECK(o.called);
        CHECK(o.participation_fraction == reached / 20000.0);
        CHECK(o.participation_fraction == doctest::Approx(p.gamma).epsilon(0.02));
    }
    SUBCASE("nobody reached")
    {
        p.gamma = 0.0;
        Population pop = spawn_population(2000, p, 4);
        for (std::uint64_t s = 0; s < 50; ++s) {
            const SimOutcome o = simulate_once(pop, p, s, kForcedE3Call);
            CHECK(o.participation_fraction == 0.0);
            CHECK_FALSE(o.success);
        }
    }
    SUBCASE("large population matches the analytic fixed point")
    {
        Population pop = spawn_population(100000, p, 12345);
        const SimOutcome o = simulate_once(pop, p, 54321, kForcedE3Call);
        CHECK(std::abs(o.participation_fraction - 0.23529) < 0.01);
        CHECK(o.beneficiary.beneficiary == Beneficiary::MajorityIncludingMinority);
    }
    SUBCASE("participants are reached and consistent with the flags")
    {
        Population pop = spawn_population(10000, p, 3);
        const SimOutcome o = simulate_once(pop, p, 3, kForcedE3Call);
        std::size_t count = 0;
        for (const Agent& a : pop.agents) {
            if (a.participates) {
                CHECK(a.reached);
                ++count;
            }
            if (a.reached && a.is_follower)
                CHECK(a.participates);
        }
        CHECK(o.participation_fraction == count / 10000.0);
    }
    SUBCASE("who calls")
    {
        Population pop = spawn_population(1000, p, 5);
        for (std::uint64_t s = 0; s < 200; ++s) {
            CHECK_FALSE(simulate_once(pop, p, s, {WorldState::E1, false}).called);
            CHECK_FALSE(simulate_once(pop, p, s, {WorldState::E2, false}).called);
        }
        ModelParams partisan = p;
        partisan.leader_type = LeaderType::Partisan;
        partisan.G2 = 1.0;
        int e2_calls = 0;
        for (std::uint64_t s = 0; s < 2000; ++s) {
            CHECK_FALSE(simulate_once(pop, partisan, s, {WorldState::E1, false}).called);
            e2_calls += simulate_once(pop, partisan, s, {WorldState::E2, false}).called;
        }
        // Calls gated by information acquisition with pi* = 0.7*0.4*1 = 0.28.
        CHECK(e2_calls / 2000.0 == doctest::Approx(0.28).epsilon(0.15));
    }
    SUBCASE("no call, no participation")
    {
        Population pop = spawn_population(1000, p, 5);
        const SimOutcome o = simulate_once(pop, p, 1, {WorldState::E1, false});
        CHECK(o.participation_fraction == 0.0);
        CHECK_FALSE(o.success);
        CHECK(o.beneficiary.beneficiary == Beneficiary::LobbyistsOnly);
        CHECK(std::none_of(pop.agents.begin(), pop.agents.end(), [](auto& a) { return a.participates; }));
    }
    SUBCASE("deterministic per seed")
    {
        Population a = spawn_population(5000, p, 9), b = spawn_population(5000, p, 9);
        const SimOutcome oa = simulate_once(a, p, 17), ob = simulate_once(b, p, 17);
        CHECK(oa.world_state == ob.world_state);
        CHECK(oa.participation_fraction == ob.participation_fraction);
        CHECK(oa.success == ob.success);
        CHECK(a == b);
    }
}

TEST_CASE("best-response rounds never lose participants")
{
    // Replay the rounds by hand and check each set contains the previous one.
    const ModelParams p = test::baseline();
    const Population pop = spawn_population(20000, p, 21);
    const double scale = p.a * effective_gain(p);
    std::size_t core = 0;
    for (const Agent& a : pop.agents)
        core += a.reached && a.is_follower;
    std::vector<bool> prev(pop.n, false);
    double x = core / 20000.0;
    for (int round = 0; round < 50; ++round) {
        std::vector<bool> cur(pop.n);
        std::size_t count = 0;
        for (std::size_t i = 0; i < pop.n; ++i) {
            const Agent& a = pop.agents[i];
            cur[i] = a.reached && (a.is_follower || a.cost <= scale * x);
            count += cur[i];
            if (prev[i])
                CHECK(cur[i]);
        }
        prev = cur;
        x = count / 20000.0;
    }
    Population copy = pop;
    const SimOutcome o = simulate_once(copy, p, 1, kForcedE3Call);
    CHECK(o.participation_fraction == x);
}

TEST_CASE("estimate_equilibrium")
{
    const ModelParams p = test::baseline();

    SUBCASE("baseline within 0.01 of the analytic participation")
    {
        const AbmEstimate e = estimate_equilibrium(p, 100000, 20, 20240601);
        CHECK(e.abs_gap < 0.01);
        CHECK(e.analytic_x == doctest::Approx(0.2352941176).epsilon(1e-9));
        CHECK(e.replications == 20);
        CHECK(e.agents_per_replication == 100000);
        CHECK(e.abs_gap == std::abs(e.mean_x - e.analytic_x));
    }
    SUBCASE("no follower core")
    {
        ModelParams q = p;
        q.theta = 0.0;
        const AbmEstimate e = estimate_equilibrium(q, 10000, 5, 3);
        CHECK(e.analytic_x == 0.0);
        CHECK(e.mean_x < 0.005);
        CHECK(e.abs_gap < 0.005);
    }
    SUBCASE("small run is well formed")
    {
        const AbmEstimate e = estimate_equilibrium(p, 1000, 2, 8);
        CHECK(e.stderr_x > 0.0);
        CHECK(std::isfinite(e.stderr_x));
    }
    SUBCASE("bit-identical for equal inputs")
    {
        const AbmEstimate a = estimate_equilibrium(p, 5000, 8, 77);
        const AbmEstimate b = estimate_equilibrium(p, 5000, 8, 77);
        CHECK(a.mean_x == b.mean_x);
        CHECK(a.stderr_x == b.stderr_x);
        CHECK(a.mean_success_rate == b.mean_success_rate);
    }
    SUBCASE("preconditions")
    {
        CHECK_THROWS_AS(estimate_equilibrium(p, 999, 5, 1), DomainError);
        CHECK_THROWS_AS(estimate_equilibrium(p, 1000, 1, 1), DomainError);
        ModelParams bad = p;
        bad.Gamma_gain = 3.0;
        CHECK_THROWS_AS(estimate_equilibrium(bad, 1000, 2, 1), ValidationError);
    }
}

TEST_CASE("estimate converges as the population grows")
{
    // Root-mean-square gap over 20 seeds; single-seed gaps are too noisy to order.
    const ModelParams p = test::baseline();
    std::vector<double> rms;
    for (std::size_t n : {1000u, 10000u, 100000u}) {
        double sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const double gap = estimate_equilibrium(p, n, 10, seed).abs_gap;
            sum += gap * gap;
        }
        rms.push_back(std::sqrt(sum / 20.0));
    }
    CHECK(rms[1] < rms[0]);
    CHECK(rms[2] < rms[1]);
}

TEST_CASE("follower core raises participation under common random numbers")
{
    ModelParams p = test::baseline();
    double prev = -1.0;
    for (double theta : {0.1, 0.2, 0.3}) {
        p.theta = theta;
        const double mean = estimate_equilibrium(p, 20000, 10, 555).mean_x;
        CHECK(mean > prev);
        prev = mean;
    }
}
