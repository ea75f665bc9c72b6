#include "leadership/abm.hpp"

#include "leadership/equilibrium.hpp"
#include "leadership/errors.hpp"
#include "leadership/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace leadership {

namespace {

// Stream indices under a simulation seed.
constexpr std::uint64_t kWorldStream = 1;
constexpr std::uint64_t kDecisionStream = 2;

bool calls_in(LeaderType type, WorldState state)
{
    if (state == WorldState::E3)
        return true;
    return state == WorldState::E2 && type == LeaderType::Partisan;
}

} // namespace

Population spawn_population(std::size_t n, const ModelParams& params, std::uint64_t seed)
{
    if (n == 0)
        throw DomainError("spawn_population: n must be at least 1");
    if (!(params.theta >= 0.0 && params.theta <= 1.0) || !(params.gamma >= 0.0 && params.gamma <= 1.0))
        throw DomainError("spawn_population: theta and gamma must lie in [0,1]");
    if (!(params.kappa_max > 0.0))
        throw DomainError("spawn_population: kappa_max must be positive");

    Population pop;
    pop.seed = seed;
    pop.n = n;
    pop.agents.resize(n);
    Rng rng(seed);
    for (Agent& agent : pop.agents) {
        const double u_follower = rng.uniform();
        const double u_cost = rng.uniform();
        const double u_reach = rng.uniform();
        agent.is_follower = u_follower < params.theta;
        agent.cost = agent.is_follower ? 0.0 : u_cost * params.kappa_max;
        agent.reached = u_reach < params.gamma;
    }
    return pop;
}

WorldState realize_world(double p1, double p2, std::uint64_t seed)
{
    const auto probs = state_probabilities(p1, p2);
    Rng rng(seed);
    const double u = rng.uniform();
    if (u < probs[0])
        return WorldState::E1;
    // Sample E2 off the conditional branch so p2 = 1 is exact.
    return rng.uniform() < p2 ? WorldState::E2 : WorldState::E3;
}

SimOutcome simulate_once(Population& population, const ModelParams& params, std::uint64_t seed,
                         const SimulateOptions& options)
{
    if (population.agents.size() != population.n || population.n == 0)
        throw DomainError("simulate_once: population size does not match its agent list");

    SimOutcome out;
    out.world_state = options.forced_state ? *options.forced_state
                                           : realize_world(params.p1, params.p2, derive_seed(seed, kWorldStream));
    out.beneficiary = gain_allocation(out.world_state);

    Rng rng(derive_seed(seed, kDecisionStream));
    if (options.force_call) {
        out.called = true;
    } else if (calls_in(params.leader_type, out.world_state)) {
        const StateGain gain = out.world_state == WorldState::E2 ? StateGain::G2 : StateGain::G3;
        out.called = rng.bernoulli(optimal_info_effort(params, gain));
    }

    for (Agent& agent : population.agents)
        agent.participates = false;
    if (!out.called)
        return out;

    // Reached followers always answer the call; reached non-followers answer
    // iff cost <= a * Gamma_eff * x_t, so only their sorted costs matter.
    std::size_t core = 0;
    std::vector<double> costs;
    costs.reserve(population.n);
    for (const Agent& agent : population.agents) {
        if (!agent.reached)
            continue;
        if (agent.is_follower)
            ++core;
        else
            costs.push_back(agent.cost);
    }
    std::sort(costs.begin(), costs.end());

    const double n = static_cast<double>(population.n);
    const double scale = params.a * effective_gain(params);
    std::size_t count = core;
    double threshold = 0.0;
    std::size_t rounds = 0;
    while (rounds < population.n + 1) {
        ++rounds;
        threshold = scale * (static_cast<double>(count) / n);
        const auto joined = static_cast<std::size_t>(std::upper_bound(costs.begin(), costs.end(), threshold) - costs.begin());
        const std::size_t next = core + joined;
        if (next == count)
            break;
        count = next;
    }

    for (Agent& agent : population.agents)
        agent.participates = agent.reached && (agent.is_follower || agent.cost <= threshold);

    out.participation_fraction = static_cast<double>(count) / n;
    out.iterations_to_converge = rounds;
    out.success = rng.bernoulli(success_probability(params.a, params.phi, out.participation_fraction));
    return out;
}

AbmEstimate estimate_equilibrium(const ModelParams& params, std::size_t n, std::size_t replications,
                                 std::uint64_t seed)
{
    if (n < 1000)
        throw DomainError("estimate_equilibrium: n must be at least 1000");
    if (replications < 2)
        throw DomainError("estimate_equilibrium: replications must be at least 2");
    validate_params(params);

    const SimulateOptions options{WorldState::E3, true};
    std::vector<double> xs(replications);
    std::vector<char> successes(replications);

    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto run = [&](std::size_t k) {
        try {
            Population pop = spawn_population(n, params, derive_seed(seed, 2 * k));
            const SimOutcome o = simulate_once(pop, params, derive_seed(seed, 2 * k + 1), options);
            xs[k] = o.participation_fraction;
            successes[k] = o.success ? 1 : 0;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, replications);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t)
            pool.emplace_back([&] {
                for (std::size_t k; (k = next.fetch_add(1)) < replications;)
                    run(k);
            });
        for (std::size_t k; (k = next.fetch_add(1)) < replications;)
            run(k);
    }
    if (failure)
        std::rethrow_exception(failure);

    AbmEstimate est;
    est.replications = replications;
    est.agents_per_replication = n;
    double sum = 0.0;
    double wins = 0.0;
    for (std::size_t k = 0; k < replications; ++k) {
        sum += xs[k];
        wins += successes[k];
    }
    const double reps = static_cast<double>(replications);
    est.mean_x = sum / reps;
    est.mean_success_rate = wins / reps;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - est.mean_x) * (x - est.mean_x);
    est.stderr_x = std::sqrt(ss / (reps - 1.0) / reps);
    est.analytic_x = solve_fixed_point(params).x_star;
    est.abs_gap = std::abs(est.mean_x - est.analytic_x);
    return est;
}

} // namespace leadership
