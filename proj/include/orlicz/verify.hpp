#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/maximal.hpp"
#include "orlicz/musielak.hpp"
#include "orlicz/sampled_function.hpp"

namespace orlicz::verify {

using json = nlohmann::ordered_json;

struct Witness {
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

/// One checker per inequality; the verdict carries the tightest empirical
/// constant over the tested set rather than a bare boolean.
struct CheckVerdict {
    std::string name;
    bool passed = false;
    double empirical_constant = 0.0;
    std::vector<Witness> witnesses;
    json params;

    json to_json() const;
    static CheckVerdict from_json(const json& j);
};

/// Superlevel bound lambda(alpha) <= (C/alpha) int_{|f|>alpha/2} |f|.
/// empirical_constant = max over alpha of lambda(alpha)*alpha / int.
CheckVerdict weak_type_upper(const SampledFunction& f, std::span<const double> alphas);

/// Reverse bound on rho*B with c1 = 1; empirical_constant = min over alpha of
/// lambda_{rho B}(alpha)*alpha / int_{f>alpha} f; passes iff bounded away
/// from zero wherever the denominator is positive.
CheckVerdict weak_type_lower(const SampledFunction& f, std::span<const double> alphas,
                             double rho = 4.0, Interval ball = {-1.0, 1.0});

/// M(f)(x) <= C / ((r-1) |B|) * ||f||_1 outside r*B.
CheckVerdict away_bound(const SampledFunction& f, std::span<const double> r_values,
                        Interval ball = {-1.0, 1.0});

/// M(f)(x) <= c * M(f)(inverted point) for x in 2B \ B, inversion through
/// the boundary of B = B(x0, r0).
CheckVerdict reflection_bound(const SampledFunction& f, Interval ball = {-1.0, 1.0});

struct SteinValues {
    double criterion_value = 0.0;
    double functional_value = 0.0;
};

/// Membership criterion vs. gauge functional of the maximal function:
///   criterion  = int_{|f|>alpha0} |f| * F^{Psi_x}_{alpha0}(|f|) dx
///   functional = int_B Psi(x, M f(x)) dx
SteinValues stein_criterion(const SampledFunction& f, const GaugeFamilySpec& family,
                            double alpha0, Interval ball = {-1.0, 1.0});

/// Psi(s,t) <= int_0^t g(s,tau) dtau <= 2 Psi(s,t) on the given samples.
CheckVerdict sandwich_check(std::span<const std::pair<double, double>> samples);
CheckVerdict sandwich_check_random(int count, unsigned long long seed,
                                   double s_max = 1e3, double t_max = 1e3);

/// Gauge functional of the smooth maximal function before/after translation.
CheckVerdict translation_check(const SampledFunction& f, double x0,
                               const MusielakGauge& gauge = {});

struct TailSpec {
    double start = 4.0;
    std::vector<double> x_maxes = {16.0, 64.0, 256.0};
};

/// Tail dichotomy for compactly supported f: nonzero mean forces pointwise
/// lower bounds and a divergent tail functional; zero mean forces the tail
/// partial integrals to be Cauchy.
CheckVerdict mean_zero_necessity(const SampledFunction& f, const MusielakGauge& gauge,
                                 const TailSpec& tail = {});

/// Product-split hypothesis F_alpha(t) S(t) >= c * int_alpha^t (M/s + F) S' ds.
CheckVerdict ms_relation_check(const OrliczFunction& m, const OrliczFunction& s,
                               double alpha0, std::span<const double> t_grid);

/// Same hypothesis for the split (t log+log+ t) * (fourth-iterate log factor),
/// evaluated entirely in u = log t coordinates; u_grid may reach far beyond
/// representable t.
CheckVerdict ms_relation_check_lie_logspace(double u_alpha0, std::span<const double> u_grid);

/// Default alpha grid: 25 log-spaced points from e^e to 0.9 * max|f|.
std::vector<double> default_alpha_grid(const SampledFunction& f, int count = 25);

} // namespace orlicz::verify
