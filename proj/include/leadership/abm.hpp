#ifndef LEADERSHIP_ABM_HPP
#define LEADERSHIP_ABM_HPP

// Agent-based Monte Carlo counterpart of the participation equilibrium.

#include "leadership/model.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace leadership {

struct Agent {
    bool is_follower = false;
    double cost = 0.0;
    bool reached = false;
    bool participates = false;

    friend bool operator==(const Agent&, const Agent&) = default;
};

struct Population {
    std::vector<Agent> agents;
    std::uint64_t seed = 0;
    std::size_t n = 0;

    friend bool operator==(const Population&, const Population&) = default;
};

struct SimOutcome {
    WorldState world_state = WorldState::E1;
    bool called = false;
    double participation_fraction = 0.0;
    bool success = false;
    StateGainAllocation beneficiary{WorldState::E1, Beneficiary::LobbyistsOnly};
    std::size_t iterations_to_converge = 0;
};

/// Overrides that isolate parts of a run.
struct SimulateOptions {
    std::optional<WorldState> forced_state;
    bool force_call = false;
};

struct AbmEstimate {
    double mean_x = 0.0;
    double stderr_x = 0.0;
    double mean_success_rate = 0.0;
    std::size_t replications = 0;
    std::size_t agents_per_replication = 0;
    double analytic_x = 0.0;
    double abs_gap = 0.0;
};

/// Each agent is a follower (cost 0) with probability theta, otherwise its
/// cost is uniform on [0, kappa_max]; it is reached with probability gamma.
/// Every agent consumes the same three draws whatever the parameters, so a
/// change of theta or gamma under one seed moves agents monotonically.
Population spawn_population(std::size_t n, const ModelParams& params, std::uint64_t seed);

WorldState realize_world(double p1, double p2, std::uint64_t seed);

/// One run of the game: nature picks the state, the policy maker acquires
/// information and may call, reached agents best-respond to last round's
/// participation until the participating set stops changing, and success is
/// drawn with probability Psi(x). Participation flags are written back into
/// `population`.
SimOutcome simulate_once(Population& population, const ModelParams& params, std::uint64_t seed,
                         const SimulateOptions& options = {});

/// Runs `replications` independent populations with the call issued in E3
/// and compares the mean participation with the analytic equilibrium.
/// Replications execute in parallel; results are aggregated in
/// replication order, so the estimate is bit-identical for a given seed.
AbmEstimate estimate_equilibrium(const ModelParams& params, std::size_t n, std::size_t replications,
                                 std::uint64_t seed);

} // namespace leadership

#endif
