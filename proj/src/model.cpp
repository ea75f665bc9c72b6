#include "leadership/model.hpp"

#include "leadership/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace leadership {

namespace {

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw DomainError(what);
}

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }
bool in_open_unit(double v) { return v > 0.0 && v < 1.0; }

[[noreturn]] void interval_violation(const char* field, const std::string& rule, double value)
{
    throw ValidationError(Constraint::Interval, field,
                          std::string("interval: ") + field + " must be " + rule + " (got " + fmt(value) + ")");
}

} // namespace

const char* constraint_name(Constraint c) noexcept
{
    switch (c) {
    case Constraint::GainBound: return "Eq(4)";
    case Constraint::InfoGainBound: return "Eq(3)";
    case Constraint::LeaderType: return "leader-type";
    case Constraint::Interval: return "interval";
    }
    return "?";
}

StateGainAllocation gain_allocation(WorldState s) noexcept
{
    switch (s) {
    case WorldState::E1: return {s, Beneficiary::LobbyistsOnly};
    case WorldState::E2: return {s, Beneficiary::MinorityPlusPolicyMaker};
    case WorldState::E3: break;
    }
    return {WorldState::E3, Beneficiary::MajorityIncludingMinority};
}

double success_probability(double a, double phi, double x)
{
    require(a > 0.0 && a < 1.0, "success_probability: a must lie in (0,1)");
    require(phi > 1.0, "success_probability: phi must exceed 1");
    require(in_unit(x), "success_probability: x must lie in [0,1]");
    return a * std::pow(x, phi) / phi;
}

double info_acquisition_cost(double q, double pi)
{
    require(q > 0.0, "info_acquisition_cost: q must be positive");
    require(in_unit(pi), "info_acquisition_cost: pi must lie in [0,1]");
    return 0.5 * q * pi * pi;
}

double partisan_participation_cost(double w, double theta)
{
    require(w >= 0.0, "partisan_participation_cost: w must be non-negative");
    require(in_unit(theta), "partisan_participation_cost: theta must lie in [0,1]");
    return 0.5 * w * theta * theta;
}

double posterior_change_state(double s, double p2, PosteriorConvention convention)
{
    require(in_unit(s), "posterior_change_state: s must lie in [0,1]");
    require(in_unit(p2), "posterior_change_state: p2 must lie in [0,1]");
    // The prior mass named by the convention, and the mass of the other
    // state discounted by the chance the call is uninformative.
    const double target = convention == PosteriorConvention::PaperEq6 ? p2 : 1.0 - p2;
    const double other = 1.0 - target;
    const double denominator = target + (1.0 - s) * other;
    require(denominator > 0.0, "posterior_change_state: denominator is zero");
    return target / denominator;
}

std::array<double, 3> state_probabilities(double p1, double p2)
{
    require(in_unit(p1), "state_probabilities: p1 must lie in [0,1]");
    require(in_unit(p2), "state_probabilities: p2 must lie in [0,1]");
    return {p1, (1.0 - p1) * p2, (1.0 - p1) * (1.0 - p2)};
}

double optimal_info_effort(const ModelParams& params, StateGain gain)
{
    require(params.q > 0.0, "optimal_info_effort: q must be positive");
    const double g = gain == StateGain::G2 ? params.G2 : params.G3;
    if (g == 0.0)
        return 0.0;
    const double benefit = (1.0 - params.p1) * params.a * params.gamma * g;
    return std::clamp(benefit / params.q, 0.0, 1.0);
}

const ModelParams& validate_params(const ModelParams& p)
{
    if (!(p.a > kCertaintyMargin && p.a < 1.0 - kCertaintyMargin))
        interval_violation("a", "in (0,1)", p.a);
    if (!(p.phi > 1.0))
        interval_violation("phi", "> 1", p.phi);
    if (!in_unit(p.theta))
        interval_violation("theta", "in [0,1]", p.theta);
    if (!in_open_unit(p.gamma))
        interval_violation("gamma", "in (0,1)", p.gamma);
    if (!(p.kappa_max > 0.0 && std::isfinite(p.kappa_max)))
        interval_violation("kappa_max", "> 0", p.kappa_max);
    if (!(p.Gamma_gain > 0.0 && std::isfinite(p.Gamma_gain)))
        interval_violation("Gamma_gain", "> 0", p.Gamma_gain);
    if (!in_unit(p.p1))
        interval_violation("p1", "in [0,1]", p.p1);
    if (!in_unit(p.p2))
        interval_violation("p2", "in [0,1]", p.p2);
    if (!in_open_unit(p.s))
        interval_violation("s", "in (0,1)", p.s);
    if (!(p.q > 0.0 && std::isfinite(p.q)))
        interval_violation("q", "> 0", p.q);
    if (!(p.w >= 0.0 && std::isfinite(p.w)))
        interval_violation("w", ">= 0", p.w);
    if (!(p.G2 >= 0.0 && std::isfinite(p.G2)))
        interval_violation("G2", ">= 0", p.G2);
    if (!(p.G3 >= 0.0 && std::isfinite(p.G3)))
        interval_violation("G3", ">= 0", p.G3);

    if (p.leader_type == LeaderType::NonPartisan) {
        if (p.G2 != 0.0)
            throw ValidationError(Constraint::LeaderType, "G2",
                                  "leader-type: a NonPartisan policy maker requires G2 = 0 (got " + fmt(p.G2) + ")");
        if (!(p.G3 > 0.0))
            throw ValidationError(Constraint::LeaderType, "G3",
                                  "leader-type: a NonPartisan policy maker requires G3 > 0");
    } else {
        if (!(p.G2 > 0.0))
            throw ValidationError(Constraint::LeaderType, "G2",
                                  "leader-type: a Partisan policy maker requires G2 > 0");
        if (!(p.G3 > 0.0))
            throw ValidationError(Constraint::LeaderType, "G3",
                                  "leader-type: a Partisan policy maker requires G3 > 0");
    }

    // Strict bounds, compared in product form so no division rounds the limit.
    const double reach = p.a * p.gamma;
    if (!(p.Gamma_gain * reach < p.kappa_max))
        throw ValidationError(Constraint::GainBound, "Gamma_gain",
                              "Eq(4): Gamma_gain must be < kappa_max/(a*gamma) (Gamma_gain=" + fmt(p.Gamma_gain) +
                                  ", bound=" + fmt(p.kappa_max / reach) + ")");
    if (p.p1 < 1.0) {
        const double scale = (1.0 - p.p1) * reach;
        const std::pair<const char*, double> gains[] = {{"G2", p.G2}, {"G3", p.G3}};
        for (auto [name, g] : gains) {
            if (g > 0.0 && !(g * scale < p.q))
                throw ValidationError(Constraint::InfoGainBound, name,
                                      std::string("Eq(3): ") + name + " must be < q/((1-p1)*a*gamma) (" + name + "=" +
                                          fmt(g) + ", bound=" + fmt(p.q / scale) + ")");
        }
    }
    return p;
}

double effective_gain(const ModelParams& params)
{
    if (params.leader_type == LeaderType::NonPartisan)
        return params.Gamma_gain;
    return params.Gamma_gain * posterior_change_state(params.s, params.p2, params.posterior_convention);
}

std::string_view to_string(LeaderType v) noexcept
{
    return v == LeaderType::Partisan ? "Partisan" : "NonPartisan";
}

std::string_view to_string(ThresholdConvention v) noexcept
{
    return v == ThresholdConvention::PaperLiteral ? "PaperLiteral" : "DerivedConsistent";
}

std::string_view to_string(PosteriorConvention v) noexcept
{
    return v == PosteriorConvention::PaperEq6 ? "PaperEq6" : "BayesConsistent";
}

std::string_view to_string(WorldState v) noexcept
{
    switch (v) {
    case WorldState::E1: return "E1";
    case WorldState::E2: return "E2";
    case WorldState::E3: break;
    }
    return "E3";
}

std::string_view to_string(Beneficiary v) noexcept
{
    switch (v) {
    case Beneficiary::LobbyistsOnly: return "LobbyistsOnly";
    case Beneficiary::MinorityPlusPolicyMaker: return "MinorityPlusPolicyMaker";
    case Beneficiary::MajorityIncludingMinority: break;
    }
    return "MajorityIncludingMinority";
}

std::optional<LeaderType> parse_leader_type(std::string_view s) noexcept
{
    if (s == "Partisan")
        return LeaderType::Partisan;
    if (s == "NonPartisan")
        return LeaderType::NonPartisan;
    return std::nullopt;
}

std::optional<ThresholdConvention> parse_threshold_convention(std::string_view s) noexcept
{
    if (s == "PaperLiteral" || s == "paper-literal")
        return ThresholdConvention::PaperLiteral;
    if (s == "DerivedConsistent" || s == "derived-consistent")
        return ThresholdConvention::DerivedConsistent;
    return std::nullopt;
}

std::optional<PosteriorConvention> parse_posterior_convention(std::string_view s) noexcept
{
    if (s == "PaperEq6" || s == "paper")
        return PosteriorConvention::PaperEq6;
    if (s == "BayesConsistent" || s == "bayes")
        return PosteriorConvention::BayesConsistent;
    return std::nullopt;
}

std::optional<WorldState> parse_world_state(std::string_view s) noexcept
{
    if (s == "E1")
        return WorldState::E1;
    if (s == "E2")
        return WorldState::E2;
    if (s == "E3")
        return WorldState::E3;
    return std::nullopt;
}

double* numeric_field(ModelParams& p, std::string_view name) noexcept
{
    return const_cast<double*>(numeric_field(static_cast<const ModelParams&>(p), name));
}

const double* numeric_field(const ModelParams& p, std::string_view name) noexcept
{
    if (name == "a") return &p.a;
    if (name == "phi") return &p.phi;
    if (name == "theta") return &p.theta;
    if (name == "gamma") return &p.gamma;
    if (name == "kappa_max") return &p.kappa_max;
    if (name == "Gamma_gain") return &p.Gamma_gain;
    if (name == "p1") return &p.p1;
    if (name == "p2") return &p.p2;
    if (name == "s") return &p.s;
    if (name == "q") return &p.q;
    if (name == "w") return &p.w;
    if (name == "G2") return &p.G2;
    if (name == "G3") return &p.G3;
    return nullptr;
}

} // namespace leadership
