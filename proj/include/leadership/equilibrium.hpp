#ifndef LEADERSHIP_EQUILIBRIUM_HPP
#define LEADERSHIP_EQUILIBRIUM_HPP

#include "leadership/model.hpp"

#include <cstddef>

namespace leadership {

struct SolverOptions {
    double tol = 1e-12;
    std::size_t max_iter = 10'000;
};

struct EquilibriumResult {
    double kappa_star = 0.0;
    double x_star = 0.0;
    double expected_participation = 0.0;
    double psi_star = 0.0;
    double effective_gain = 0.0;
    ThresholdConvention convention = ThresholdConvention::DerivedConsistent;
    std::size_t iterations = 0;
    double residual = 0.0;
    double closed_form_gap = 0.0;
};

struct EquilibriumReport {
    EquilibriumResult equilibrium;
    CostReport costs;
};

/// kappa -> a * Gamma_eff * gamma * [theta + (1-theta) min(kappa, kappa_max)/kappa_max].
/// A non-follower with cost kappa' participates iff kappa' is at most the
/// returned value, given everyone else uses threshold `kappa`.
double best_response_map(const ModelParams& params, double kappa);

/// Lipschitz modulus of best_response_map on [0, kappa_max].
double contraction_modulus(const ModelParams& params);

/// Iterates best_response_map from zero until successive thresholds differ
/// by at most `options.tol`. Throws ConvergenceError past `options.max_iter`.
EquilibriumResult solve_fixed_point(const ModelParams& params, const SolverOptions& options = {});

double closed_form_threshold(const ModelParams& params, ThresholdConvention convention);

/// gamma * [theta + (1-theta) kappa_star / kappa_max].
double participation_fraction(const ModelParams& params, double kappa_star);

/// Solves the equilibrium for `params` (validated first) and attaches the
/// policy maker's information cost and the followers' participation cost.
EquilibriumReport equilibrium_report(const ModelParams& params, const SolverOptions& options = {});

} // namespace leadership

#endif
