#ifndef LEADERSHIP_MODEL_HPP
#define LEADERSHIP_MODEL_HPP

// Domain types and closed-form expressions of the leadership / reform model.
//
// A policy maker may issue a call to action G. A fraction gamma of the
// population receives it; within that fraction a share theta are committed
// followers with zero participation cost, the rest draw their cost uniformly
// on [0, kappa_max]. The reform succeeds with probability
// Psi = (1/phi) * a * x^phi where x is the participating fraction.

#include <array>
#include <optional>
#include <string_view>

namespace leadership {

enum class LeaderType { Partisan, NonPartisan };

/// Which sign the closed-form threshold uses inside its bracket.
enum class ThresholdConvention {
    PaperLiteral,      // theta / (1/(a gamma Gamma) + (1-theta)/kappa_max)
    DerivedConsistent, // theta / (1/(a gamma Gamma) - (1-theta)/kappa_max)
};

/// How P(E3 | call) is computed for a partisan policy maker.
enum class PosteriorConvention {
    PaperEq6,        // p2 / (p2 + (1-s)(1-p2))
    BayesConsistent, // (1-p2) / ((1-p2) + (1-s) p2)
};

enum class WorldState { E1, E2, E3 };

enum class Beneficiary {
    LobbyistsOnly,
    MinorityPlusPolicyMaker,
    MajorityIncludingMinority,
};

struct StateGainAllocation {
    WorldState state;
    Beneficiary beneficiary;

    friend bool operator==(const StateGainAllocation&, const StateGainAllocation&) = default;
};

/// Who captures the reform gains in each state.
StateGainAllocation gain_allocation(WorldState s) noexcept;

/// Which of the policy maker's state gains to look at.
enum class StateGain { G2, G3 };

struct ModelParams {
    double a = 0.5;          ///< certainty of the reform process, (0,1)
    double phi = 2.0;        ///< complementarity between participants, > 1
    double theta = 0.2;      ///< share of zero-cost followers, [0,1]
    double gamma = 0.8;      ///< share reached by the call, (0,1)
    double kappa_max = 1.0;  ///< upper end of the uniform cost support, > 0
    double Gamma_gain = 1.0; ///< participant's gain from a successful reform, > 0
    double p1 = 0.3;         ///< P(E1), [0,1]
    double p2 = 0.4;         ///< branch probability separating E2 from E3, [0,1]
    double s = 0.5;          ///< perceived alignment of the policy maker with the majority, (0,1)
    double q = 1.0;          ///< ability scale of information acquisition, > 0
    double w = 2.0;          ///< ex-post participation cost scale, >= 0
    double G2 = 0.0;         ///< policy maker's gain in E2, >= 0
    double G3 = 2.0;         ///< policy maker's gain in E3, >= 0
    LeaderType leader_type = LeaderType::NonPartisan;
    ThresholdConvention threshold_convention = ThresholdConvention::DerivedConsistent;
    PosteriorConvention posterior_convention = PosteriorConvention::PaperEq6;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct CostReport {
    double info_effort = 0.0;    ///< pi*, the optimal information-acquisition probability
    double info_cost = 0.0;      ///< (1/2) q pi*^2
    double partisan_cost = 0.0;  ///< (1/2) w theta^2
};

/// Margin keeping `a` away from its degenerate endpoints 0 and 1.
inline constexpr double kCertaintyMargin = 1e-12;

double success_probability(double a, double phi, double x);

double info_acquisition_cost(double q, double pi);

double partisan_participation_cost(double w, double theta);

/// P(E3 | the policy maker called). Throws DomainError on a zero denominator.
double posterior_change_state(double s, double p2, PosteriorConvention convention);

/// (P(E1), P(E2), P(E3)).
std::array<double, 3> state_probabilities(double p1, double p2);

/// Maximizer of pi * (1-p1) a gamma G_i - (1/2) q pi^2, clipped to 1.
double optimal_info_effort(const ModelParams& params, StateGain gain);

/// Returns `params` unchanged or throws ValidationError naming the
/// violated constraint.
const ModelParams& validate_params(const ModelParams& params);

/// Gain a non-follower expects from a successful reform once the call is
/// observed: Gamma for a NonPartisan policy maker, Gamma * P(E3 | call) for
/// a Partisan one.
double effective_gain(const ModelParams& params);

// Name <-> enum helpers shared by the scenario reader and the C API.
std::string_view to_string(LeaderType v) noexcept;
std::string_view to_string(ThresholdConvention v) noexcept;
std::string_view to_string(PosteriorConvention v) noexcept;
std::string_view to_string(WorldState v) noexcept;
std::string_view to_string(Beneficiary v) noexcept;
std::optional<LeaderType> parse_leader_type(std::string_view s) noexcept;
std::optional<ThresholdConvention> parse_threshold_convention(std::string_view s) noexcept;
std::optional<PosteriorConvention> parse_posterior_convention(std::string_view s) noexcept;
std::optional<WorldState> parse_world_state(std::string_view s) noexcept;

/// Pointer to the numeric field called `name` ("a", "phi", "theta", ...),
/// or nullptr for an unknown name.
double* numeric_field(ModelParams& params, std::string_view name) noexcept;
const double* numeric_field(const ModelParams& params, std::string_view name) noexcept;

/// Names accepted by numeric_field, in declaration order.
inline constexpr std::array<std::string_view, 13> kNumericFields = {
    "a", "phi", "theta", "gamma", "kappa_max", "Gamma_gain",
    "p1", "p2", "s", "q", "w", "G2", "G3",
};

} // namespace leadership

#endif
