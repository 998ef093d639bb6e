#pragma once

namespace orlicz::kernels {

// Inner loops of the maximal operators come in a scalar reference flavor and
// an AVX2 flavor selected at runtime. Both produce bit-identical output: the
// AVX2 paths vectorize across candidate radii (window max) or across output
// points (correlation) while keeping every per-point operation sequence equal
// to the scalar one. No FMA contraction anywhere.
enum class Backend { scalar, avx2 };

Backend active_backend();                 // honors ORLICZ_LAB_SIMD=scalar|avx2|auto
bool backend_available(Backend be);
const char* backend_name(Backend be);

struct SegmentGrid {
    const double* cum;   // n+1 prefix integrals of |f| (cum[0] = 0)
    const double* absv;  // n cell values |f|
    int n;
    double a, b, h, inv_h;
};

// For each grid point i in [i0, i1): maximize the clipped-window average of
// |f| over candidate radii r = k*h (k = 1..kcap[i]) plus up to two extra
// per-point radii (entries <= 0 are skipped). The window is [x_i - r, x_i + r]
// intersected with [a, b] and the measure is the clipped length. Ties go to
// the smallest radius. Writes mval[i] and argr[i].
void window_max_segment(Backend be, const SegmentGrid& g, const int* kcap,
                        const double* edge0, const double* edge1,
                        int i0, int i1, double* mval, double* argr);

void window_max_segment_explicit(Backend be, const SegmentGrid& g,
                                 const double* radii, int nr,
                                 int i0, int i1, double* mval, double* argr);

struct TorusGrid {
    const double* cum3;   // 3n+1 prefix integrals over three copies
    const double* absv3;  // 3n
    int n;
    double h, inv_h;
    double circumference;
};

// Arcs wrap; radii are capped at half the circumference (larger radii act as
// the full-circle mean). The measure of an arc of radius r is min(2r, 2*pi).
void window_max_torus(Backend be, const TorusGrid& g, const int* kcap,
                      const double* edge0, const double* edge1,
                      int i0, int i1, double* mval, double* argr);

void window_max_torus_explicit(Backend be, const TorusGrid& g,
                               const double* radii, int nr,
                               int i0, int i1, double* mval, double* argr);

// out[i] = scale * sum_{j=j0}^{j1-1} v[j] * taps[i - j + toff] for i in
// [i0, i1), accumulated in ascending j order per point. The caller guarantees
// taps is addressable for every index in range. Serves both segment
// convolutions (taps = zero-padded kernel samples) and circulant torus
// convolutions (taps = doubled kernel row, toff = n).
void correlate(Backend be, const double* v, int j0, int j1,
               const double* taps, int toff, double scale,
               int i0, int i1, double* out);

} // namespace orlicz::kernels
