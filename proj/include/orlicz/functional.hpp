#pragma once

#include "orlicz/musielak.hpp"
#include "orlicz/orlicz_function.hpp"
#include "orlicz/sampled_function.hpp"

namespace orlicz {

/// Midpoint-rule approximation of int_region Psi(|x|, |f(x)|) dx.
/// On the torus the spatial distance is the geodesic distance to theta = 0.
/// Throws EmptyRegion when no grid cell midpoint lies in the region.
double orlicz_functional(const SampledFunction& f, const MusielakGauge& gauge,
                         Interval region);

/// int_region Phi(|f(x)|) dx for a plain (x-independent) gauge.
double orlicz_functional(const SampledFunction& f, const OrliczFunction& phi,
                         Interval region);

/// General pointwise family.
double orlicz_functional(const SampledFunction& f, const GaugeFamilySpec& family,
                         Interval region);

Interval full_region(const SampledFunction& f);

} // namespace orlicz
