#pragma once

#include <cmath>
#include <string>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

/// Spatially weighted gauge Psi(s, t) with s = |x| (distance to the origin).
/// The default instance is the gauge
///   Psi(s, t) = t / (log(e + t) + log(e + s)) = t * g(s, t).
struct MusielakGauge {
    /// g(s, t) = 1 / (log(e + t) + log(e + s))
    double kernel(double s, double t) const {
        return 1.0 / (std::log(M_E + t) + std::log(M_E + s));
    }
    double operator()(double s, double t) const { return t * kernel(s, t); }
    double eval(double s, double t) const { return (*this)(s, t); }
};

double eval_gauge(const MusielakGauge& gauge, double s, double t);

enum class SpatialWeight { none, log_weight };

/// A pointwise family of Orlicz gauges Psi_x built from a base gauge:
///   none:       Psi_x(t) = Phi(t)
///   log_weight: Psi_x(t) = Phi(t) * log(e+t) / (log(e+t) + log(e+|x|))
/// With base psi0 and log_weight this reproduces MusielakGauge exactly
/// (up to rounding of the rearranged product).
struct GaugeFamilySpec {
    OrliczFunction base;
    SpatialWeight weight = SpatialWeight::none;

    /// Freeze the spatial coordinate: an OrliczFunction view of Psi_x.
    OrliczFunction pointwise(double s) const;

    /// Psi(s, t) for functional integration.
    double eval(double s, double t) const;

    static GaugeFamilySpec paper() {
        return {gauge_registry("psi0"), SpatialWeight::log_weight};
    }
    static GaugeFamilySpec plain(const std::string& gauge_name) {
        return {gauge_registry(gauge_name), SpatialWeight::none};
    }
};

} // namespace orlicz
