#include "leadership/equilibrium.hpp"

#include "leadership/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace leadership {

double best_response_map(const ModelParams& params, double kappa)
{
    if (!(kappa >= 0.0))
        throw DomainError("best_response_map: kappa must be non-negative");
    const double share = std::min(kappa, params.kappa_max) / params.kappa_max;
    const double expected_x = params.gamma * (params.theta + (1.0 - params.theta) * share);
    return params.a * effective_gain(params) * expected_x;
}

double contraction_modulus(const ModelParams& params)
{
    return params.a * effective_gain(params) * params.gamma * (1.0 - params.theta) / params.kappa_max;
}

double closed_form_threshold(const ModelParams& params, ThresholdConvention convention)
{
    const double gain = effective_gain(params);
    if (params.theta == 0.0 || gain == 0.0)
        return 0.0;
    const double inverse_reach = 1.0 / (params.a * params.gamma * gain);
    const double slope = (1.0 - params.theta) / params.kappa_max;
    const double denominator =
        convention == ThresholdConvention::PaperLiteral ? inverse_reach + slope : inverse_reach - slope;
    if (!(denominator > 0.0))
        throw DomainError("closed_form_threshold: non-positive denominator");
    return params.theta / denominator;
}

double participation_fraction(const ModelParams& params, double kappa_star)
{
    if (!(kappa_star >= 0.0 && kappa_star <= params.kappa_max))
        throw DomainError("participation_fraction: kappa_star must lie in [0, kappa_max]");
    return params.gamma * (params.theta + (1.0 - params.theta) * kappa_star / params.kappa_max);
}

EquilibriumResult solve_fixed_point(const ModelParams& params, const SolverOptions& options)
{
    if (!(options.tol > 0.0))
        throw DomainError("solve_fixed_point: tol must be positive");
    if (options.max_iter < 1)
        throw DomainError("solve_fixed_point: max_iter must be at least 1");

    double kappa = 0.0;
    double residual = 0.0;
    std::size_t iter = 0;
    bool converged = false;
    while (iter < options.max_iter) {
        const double next = best_response_map(params, kappa);
        residual = std::abs(next - kappa);
        kappa = next;
        ++iter;
        if (residual <= options.tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("solve_fixed_point: no convergence after " + std::to_string(options.max_iter) +
                               " iterations (residual " + std::to_string(residual) + ")");

    EquilibriumResult r;
    r.kappa_star = kappa;
    r.x_star = participation_fraction(params, kappa);
    r.expected_participation = r.x_star;
    r.psi_star = success_probability(params.a, params.phi, r.x_star);
    r.effective_gain = effective_gain(params);
    r.convention = params.threshold_convention;
    r.iterations = iter;
    r.residual = residual;
    r.closed_form_gap = std::abs(kappa - closed_form_threshold(params, params.threshold_convention));
    return r;
}

EquilibriumReport equilibrium_report(const ModelParams& params, const SolverOptions& options)
{
    validate_params(params);
    EquilibriumReport report;
    report.equilibrium = solve_fixed_point(params, options);

    double effort = optimal_info_effort(params, StateGain::G3);
    if (params.leader_type == LeaderType::Partisan)
        effort = std::max(effort, optimal_info_effort(params, StateGain::G2));
    report.costs.info_effort = effort;
    report.costs.info_cost = info_acquisition_cost(params.q, effort);
    report.costs.partisan_cost = partisan_participation_cost(params.w, params.theta);
    return report;
}

} // namespace leadership
