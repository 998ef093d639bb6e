#pragma once

#include <span>
#include <vector>

#include "orlicz/sampled_function.hpp"

namespace orlicz {

/// Samples of a maximal function together with the radius (or dilation)
/// achieving the discrete sup at each point.
struct MaximalProfile {
    SampledFunction base;
    std::vector<double> mvalues;
    std::vector<double> argmax_radius;

    /// View the maximal values as a sampled function on the same grid.
    SampledFunction as_function() const;
};

struct RadiusPolicy {
    enum class Kind { all_grid, explicit_list };
    Kind kind = Kind::all_grid;
    std::vector<double> radii;  // explicit_list only

    static RadiusPolicy all_grid() { return {}; }
    static RadiusPolicy explicit_list(std::vector<double> rs);
};

/// Discrete centered Hardy-Littlewood maximal function. all_grid scans every
/// multiple of h up to the domain size plus the radii aligning window edges
/// with the support hint; windows clip at segment boundaries with
/// clipped-length normalization; arcs wrap on the torus.
MaximalProfile hl_maximal(const SampledFunction& f, const RadiusPolicy& policy);

/// Exact centered maximal function of delta^{-1} chi_[-delta,delta] on the
/// line: delta^{-1} for |x| <= delta, 1/(|x| + delta) beyond.
double analytic_maximal_indicator(double delta, double x);

/// Radial bump: c0 on [0, 1/2], smooth cutoff to 0 at 1, unit total integral
/// over [-1, 1] (c0 solved numerically once).
struct BumpProfile {
    double c0 = 0.0;
    double operator()(double rho) const;
    static const BumpProfile& standard();
};

/// Smooth maximal function: max over the dilation list of |(f * phi_eps)(x_i)|
/// with phi_eps(x) = eps^{-1} profile(|x|/eps), by direct quadrature.
MaximalProfile smooth_maximal(const SampledFunction& f, const BumpProfile& bump,
                              std::span<const double> epsilons);

/// Point evaluations (x need not be a grid point); used for tail estimates
/// where the dilation list depends on the point.
double smooth_convolution_at(const SampledFunction& f, const BumpProfile& bump,
                             double x, double eps);
double smooth_maximal_at(const SampledFunction& f, const BumpProfile& bump,
                         double x, std::span<const double> epsilons);

/// Poisson-kernel maximal function on the torus: max over r of
/// |(P_r * f)(theta_i)| / (2*pi), by direct periodic quadrature.
MaximalProfile poisson_maximal(const SampledFunction& f, std::span<const double> rs);

double poisson_kernel(double r, double theta);

/// For each alpha: (alpha, h * #{i : mvalues[i] > alpha}).
std::vector<std::pair<double, double>> distribution_function(
    const MaximalProfile& p, std::span<const double> alphas);

} // namespace orlicz
