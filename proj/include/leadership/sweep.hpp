#ifndef LEADERSHIP_SWEEP_HPP
#define LEADERSHIP_SWEEP_HPP

// Comparative statics: one-parameter grids, Psi panels and numerical
// sensitivities of the equilibrium threshold.

#include "leadership/equilibrium.hpp"
#include "leadership/model.hpp"

#include <span>
#include <string>
#include <vector>

namespace leadership {

enum class Monotonicity { Increasing, Decreasing, NonMonotone, Constant };

std::string_view to_string(Monotonicity m) noexcept;

/// Absolute tolerance below which two successive outputs count as equal.
inline constexpr double kMonotonicityTol = 1e-12;

struct SweepPoint {
    double kappa_star = 0.0;
    double x_star = 0.0;
    double psi_star = 0.0;
};

/// A grid value that could not be evaluated, and why.
struct SkippedPoint {
    double value = 0.0;
    std::string reason;
};

struct SweepSeries {
    std::string parameter_name;
    std::vector<double> values;
    std::vector<SweepPoint> outputs;
    Monotonicity monotonicity = Monotonicity::Constant;
    std::vector<SkippedPoint> skipped;
};

struct MonotonicityVerdict {
    Monotonicity monotonicity = Monotonicity::Constant;
    std::size_t length = 0;
    double min_step = 0.0;  ///< smallest successive difference
    double max_step = 0.0;  ///< largest successive difference
};

/// Strict classification of a sequence; Constant only when every step is
/// within `tol` of zero, NonMonotone on mixed or tied steps.
MonotonicityVerdict classify_sequence(std::span<const double> ys, double tol = kMonotonicityTol);

/// Classifies the kappa_star column of `series`.
MonotonicityVerdict monotonicity_check(const SweepSeries& series);

/// Evaluates the equilibrium at each grid value of `parameter_name`.
/// Invalid grid points are recorded in `skipped`; an all-invalid grid or a
/// grid that is not strictly increasing throws.
SweepSeries grid_sweep(const ModelParams& base, const std::string& parameter_name, std::span<const double> values);

struct PsiSeries {
    std::string parameter_name;
    std::vector<double> values;
    std::vector<double> psi;
    Monotonicity monotonicity = Monotonicity::Constant;
};

/// Fixed coordinates of the Psi panels; each panel varies one of them.
struct PsiBaseline {
    double a = 0.5;
    double phi = 2.0;
    double x = 0.5;
};

struct PsiPanels {
    PsiSeries by_a;
    PsiSeries by_phi;
    PsiSeries by_x;
};

PsiPanels psi_panels(std::span<const double> a_values, std::span<const double> phi_values,
                       std::span<const double> x_values, const PsiBaseline& baseline = {});

/// True when successive slopes of (values, ys) are non-decreasing.
bool is_convex(std::span<const double> values, std::span<const double> ys, double tol = kMonotonicityTol);

/// Central difference of kappa_star in `parameter_name`. At a domain
/// boundary where only one side is valid, falls back to the one-sided
/// difference on the valid side.
double finite_difference_sensitivity(const ModelParams& base, const std::string& parameter_name, double h);

} // namespace leadership

#endif
