/**
 * @file search.hpp
 * @brief Golden-section search for a unimodal maximum.
 */
#pragma once

#include <cmath>

namespace gyro {

struct Extremum {
    double x = 0.0;
    double value = 0.0;
};

/// Maximizes a unimodal f on [lo, hi] until the bracket is narrower than
/// tol * (1 + |x|).
template <class F>
Extremum golden_section_max(F&& f, double lo, double hi, double tol = 1.0e-12, int max_iter = 500) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (hi - lo) > tol * (1.0 + std::abs(c)); ++i) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
}

}  // namespace gyro
