#pragma once

#include <cmath>

namespace orlicz {

// log+(t) = max(log t, 0), with log+(0) = 0.
inline double log_plus(double t) {
    return t > 1.0 ? std::log(t) : 0.0;
}

// k-fold composition of log+. log_plus_iter(t, 1) == log_plus(t).
inline double log_plus_iter(double t, int k) {
    for (int i = 0; i < k; ++i) t = log_plus(t);
    return t;
}

// Iterated log+ of t given u = log t. Handles t far beyond double range:
// log+^k(t) = log+^{k-1}(max(u, 0)).
inline double log_plus_iter_from_log(double u, int k) {
    double t = u > 0.0 ? u : 0.0;
    return log_plus_iter(t, k - 1);
}

} // namespace orlicz
