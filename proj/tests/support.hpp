// Test-only helpers: baseline parameters, a generator of random valid
// parameter sets, and closed-form oracles written independently of the
// library's solver path.
#ifndef LEADERSHIP_TESTS_SUPPORT_HPP
#define LEADERSHIP_TESTS_SUPPORT_HPP

#include "leadership/model.hpp"

#include <cstdint>

namespace test {

/// a=0.5, phi=2, theta=0.2, gamma=0.8, kappa_max=1, Gamma=1, NonPartisan.
inline leadership::ModelParams baseline()
{
    leadership::ModelParams p;
    p.a = 0.5;
    p.phi = 2.0;
    p.theta = 0.2;
    p.gamma = 0.8;
    p.kappa_max = 1.0;
    p.Gamma_gain = 1.0;
    p.p1 = 0.3;
    p.p2 = 0.4;
    p.s = 0.5;
    p.q = 1.0;
    p.w = 2.0;
    p.G2 = 0.0;
    p.G3 = 2.0;
    p.leader_type = leadership::LeaderType::NonPartisan;
    p.threshold_convention = leadership::ThresholdConvention::DerivedConsistent;
    p.posterior_convention = leadership::PosteriorConvention::PaperEq6;
    return p;
}

/// 64-bit LCG (Knuth MMIX constants); separate from the library's generator.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed * 2 + 1) {}

    double uniform()
    {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state_ >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

struct RandomParamsOptions {
    double theta_lo = 0.0;
    double theta_hi = 1.0;
};

/// Draws a parameter set that satisfies every model constraint, with the
/// gain bounds filled to at most 99% of their limits.
inline leadership::ModelParams random_valid_params(Lcg& g, const RandomParamsOptions& o = {})
{
    leadership::ModelParams p;
    p.a = g.uniform(0.05, 0.95);
    p.phi = g.uniform(1.05, 5.0);
    p.theta = g.uniform(o.theta_lo, o.theta_hi);
    p.gamma = g.uniform(0.05, 0.95);
    p.kappa_max = g.uniform(0.2, 5.0);
    p.Gamma_gain = g.uniform(0.01, 0.99) * p.kappa_max / (p.a * p.gamma);
    p.p1 = g.uniform(0.0, 0.9);
    p.p2 = g.uniform(0.05, 0.95);
    p.s = g.uniform(0.01, 0.99);
    p.q = g.uniform(0.1, 3.0);
    p.w = g.uniform(0.0, 3.0);
    const double info_bound = p.q / ((1.0 - p.p1) * p.a * p.gamma);
    p.G3 = g.uniform(0.01, 0.99) * info_bound;
    if (g.uniform() < 0.5) {
        p.leader_type = leadership::LeaderType::Partisan;
        p.G2 = g.uniform(0.01, 0.99) * info_bound;
    } else {
        p.leader_type = leadership::LeaderType::NonPartisan;
        p.G2 = 0.0;
    }
    p.posterior_convention =
        g.uniform() < 0.5 ? leadership::PosteriorConvention::PaperEq6 : leadership::PosteriorConvention::BayesConsistent;
    return p;
}

/// Posterior of the change state, written from the two-state Bayes table.
inline double oracle_posterior(const leadership::ModelParams& p)
{
    const double prior = p.posterior_convention == leadership::PosteriorConvention::PaperEq6 ? p.p2 : 1.0 - p.p2;
    return prior / (prior + (1.0 - p.s) * (1.0 - prior));
}

inline double oracle_effective_gain(const leadership::ModelParams& p)
{
    return p.leader_type == leadership::LeaderType::NonPartisan ? p.Gamma_gain : p.Gamma_gain * oracle_posterior(p);
}

/// Fixed point of the linear map k = c (theta + (1-theta) k / kappa_max),
/// c = a Gamma_eff gamma, solved directly: k = c theta / (1 - c (1-theta)/kappa_max).
inline double oracle_kappa(const leadership::ModelParams& p)
{
    const double c = p.a * oracle_effective_gain(p) * p.gamma;
    return c * p.theta / (1.0 - c * (1.0 - p.theta) / p.kappa_max);
}

inline double oracle_x(const leadership::ModelParams& p)
{
    return p.gamma * (p.theta + (1.0 - p.theta) * oracle_kappa(p) / p.kappa_max);
}

/// d kappa* / d theta of the derived closed form, with
/// D = 1/(a gamma Gamma_eff) - (1-theta)/kappa_max: (D - theta/kappa_max) / D^2.
inline double oracle_dkappa_dtheta(const leadership::ModelParams& p)
{
    const double d = 1.0 / (p.a * p.gamma * oracle_effective_gain(p)) - (1.0 - p.theta) / p.kappa_max;
    return (d - p.theta / p.kappa_max) / (d * d);
}

} // namespace test

#endif
