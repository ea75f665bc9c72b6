#include "leadership/sweep.hpp"

#include "leadership/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace leadership {

namespace {

ModelParams with_value(const ModelParams& base, const std::string& name, double value)
{
    ModelParams p = base;
    double* field = numeric_field(p, name);
    if (!field)
        throw DomainError("unknown parameter '" + name + "'");
    *field = value;
    return p;
}

bool strictly_increasing(std::span<const double> v)
{
    return std::adjacent_find(v.begin(), v.end(), [](double l, double r) { return !(l < r); }) == v.end();
}

PsiSeries psi_panel(std::string name, std::span<const double> values, auto&& psi_at)
{
    if (!strictly_increasing(values))
        throw DomainError("psi_panels: " + name + " values must be strictly increasing");
    PsiSeries series;
    series.parameter_name = std::move(name);
    series.values.assign(values.begin(), values.end());
    for (double v : values)
        series.psi.push_back(psi_at(v));
    series.monotonicity = classify_sequence(series.psi).monotonicity;
    return series;
}

} // namespace

std::string_view to_string(Monotonicity m) noexcept
{
    switch (m) {
    case Monotonicity::Increasing: return "Increasing";
    case Monotonicity::Decreasing: return "Decreasing";
    case Monotonicity::NonMonotone: return "NonMonotone";
    case Monotonicity::Constant: break;
    }
    return "Constant";
}

MonotonicityVerdict classify_sequence(std::span<const double> ys, double tol)
{
    MonotonicityVerdict v;
    v.length = ys.size();
    if (ys.size() < 2)
        return v;

    bool up = true, down = true, flat = true;
    v.min_step = ys[1] - ys[0];
    v.max_step = v.min_step;
    for (std::size_t i = 1; i < ys.size(); ++i) {
        const double d = ys[i] - ys[i - 1];
        v.min_step = std::min(v.min_step, d);
        v.max_step = std::max(v.max_step, d);
        up = up && d > tol;
        down = down && d < -tol;
        flat = flat && std::abs(d) <= tol;
    }
    v.monotonicity = flat   ? Monotonicity::Constant
                     : up   ? Monotonicity::Increasing
                     : down ? Monotonicity::Decreasing
                            : Monotonicity::NonMonotone;
    return v;
}

MonotonicityVerdict monotonicity_check(const SweepSeries& series)
{
    std::vector<double> kappas;
    kappas.reserve(series.outputs.size());
    for (const SweepPoint& p : series.outputs)
        kappas.push_back(p.kappa_star);
    return classify_sequence(kappas);
}

SweepSeries grid_sweep(const ModelParams& base, const std::string& parameter_name, std::span<const double> values)
{
    if (!numeric_field(base, parameter_name))
        throw DomainError("grid_sweep: unknown parameter '" + parameter_name + "'");
    if (values.empty())
        throw DomainError("grid_sweep: empty grid");
    if (!strictly_increasing(values))
        throw DomainError("grid_sweep: grid values must be strictly increasing");

    SweepSeries series;
    series.parameter_name = parameter_name;
    for (double v : values) {
        const ModelParams p = with_value(base, parameter_name, v);
        try {
            const EquilibriumReport r = equilibrium_report(p);
            series.values.push_back(v);
            series.outputs.push_back({r.equilibrium.kappa_star, r.equilibrium.x_star, r.equilibrium.psi_star});
        } catch (const ValidationError& e) {
            series.skipped.push_back({v, e.what()});
        }
    }
    if (series.values.empty()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%zu", values.size());
        throw ValidationError(Constraint::Interval, parameter_name,
                              "grid_sweep: all " + std::string(buf) + " grid points are invalid; first: " +
                                  series.skipped.front().reason);
    }
    series.monotonicity = monotonicity_check(series).monotonicity;
    return series;
}

PsiPanels psi_panels(std::span<const double> a_values, std::span<const double> phi_values,
                       std::span<const double> x_values, const PsiBaseline& b)
{
    PsiPanels f;
    f.by_a = psi_panel("a", a_values, [&](double a) { return success_probability(a, b.phi, b.x); });
    f.by_phi = psi_panel("phi", phi_values, [&](double phi) { return success_probability(b.a, phi, b.x); });
    f.by_x = psi_panel("x", x_values, [&](double x) { return success_probability(b.a, b.phi, x); });
    return f;
}

bool is_convex(std::span<const double> values, std::span<const double> ys, double tol)
{
    if (values.size() != ys.size())
        throw DomainError("is_convex: length mismatch");
    for (std::size_t i = 2; i < ys.size(); ++i) {
        const double left = (ys[i - 1] - ys[i - 2]) / (values[i - 1] - values[i - 2]);
        const double right = (ys[i] - ys[i - 1]) / (values[i] - values[i - 1]);
        if (right < left - tol)
            return false;
    }
    return true;
}

double finite_difference_sensitivity(const ModelParams& base, const std::string& parameter_name, double h)
{
    if (!(h > 0.0))
        throw DomainError("finite_difference_sensitivity: h must be positive");
    const double* field = numeric_field(base, parameter_name);
    if (!field)
        throw DomainError("finite_difference_sensitivity: unknown parameter '" + parameter_name + "'");
    const double x0 = *field;

    validate_params(base);
    const auto kappa_at = [&](double v) {
        return equilibrium_report(with_value(base, parameter_name, v)).equilibrium.kappa_star;
    };
    const auto valid_at = [&](double v) {
        try {
            validate_params(with_value(base, parameter_name, v));
            return true;
        } catch (const ValidationError&) {
            return false;
        }
    };

    const bool up = valid_at(x0 + h);
    const bool down = valid_at(x0 - h);
    if (up && down)
        return (kappa_at(x0 + h) - kappa_at(x0 - h)) / (2.0 * h);
    if (up)
        return (kappa_at(x0 + h) - kappa_at(x0)) / h;
    if (down)
        return (kappa_at(x0) - kappa_at(x0 - h)) / h;
    // Neither neighbour is valid; let validation report the upper one.
    validate_params(with_value(base, parameter_name, x0 + h));
    return 0.0;
}

} // namespace leadership
