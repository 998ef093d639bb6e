#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

enum class DomainKind { segment, torus };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
};

/// Uniform-grid samples at cell midpoints over a segment [a, b] or the torus
/// [0, 2*pi). The discrete stand-in for f is the piecewise-constant function
/// equal to values[i] on cell i, which makes midpoint quadrature exact.
struct SampledFunction {
    DomainKind kind = DomainKind::segment;
    double a = 0.0;
    double b = 0.0;
    std::vector<double> values;
    /// Values outside this interval are exactly zero (an exact promise, not
    /// an approximation; operators use it to prune work).
    std::optional<Interval> support;

    int n() const { return static_cast<int>(values.size()); }
    double h() const { return (b - a) / static_cast<double>(n()); }
    double x(int i) const { return a + (static_cast<double>(i) + 0.5) * h(); }

    double integral_abs() const;   // int |f|
    double integral() const;       // int f
    double max_abs() const;
};

SampledFunction make_segment(double a, double b, int n);
SampledFunction make_torus(int n);

/// delta^{-1} on [-delta, delta] (segment, centered at 0) or on an arc of
/// length 2*delta centered at pi (torus). The support snaps to whole cells and
/// the height is adjusted so the total mass is exactly 2.
SampledFunction generate_indicator(const SampledFunction& grid, double delta);

/// Antisymmetric mean-zero pair delta^{-1} (chi_[0,delta) - chi_[-delta,0)).
SampledFunction generate_meanzero(const SampledFunction& grid, double delta);

SampledFunction generate_constant(const SampledFunction& grid, double c);
SampledFunction generate_cosine(const SampledFunction& grid);

/// Builtin generator strings: indicator:delta=<v>, meanzero:delta=<v>,
/// constant:c=<v>, cosine, csv:<path>. Throws InvalidInput on unknown specs.
SampledFunction generate_from_spec(const std::string& spec, const SampledFunction& grid);

/// CSV with header "x,value"; uniform grid enforced on load.
SampledFunction load_csv(const std::string& path);
void save_csv(const SampledFunction& f, const std::string& path);

} // namespace orlicz
