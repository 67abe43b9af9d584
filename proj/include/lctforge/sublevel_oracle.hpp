#pragma once

#include <vector>

#include "lctforge/monomial_ideal.hpp"
#include "lctforge/rational.hpp"

namespace lctforge {

struct OraclePoint {
    double r = 0.0;
    double volume = 0.0;
    double local_slope = 0.0;  // log-volume slope against the previous radius
};

struct OracleReport {
    std::vector<OraclePoint> points;
    double fitted_slope = 0.0;  // least-squares slope of log V against log r
};

// Default radii: log-spaced in [1e-3, 1e-1].
std::vector<Rational> default_oracle_radii(int count = 8);

// Measures the sublevel sets { sum_i |x^{a_i}| < r } inside the unit
// polydisc. The set depends only on the moduli s_j = |x_j|, so the volume
// is (2*pi)^n times the moduli integral with weight prod s_j ds_j. The
// outer n-1 axes use a composite midpoint rule (grid_points per axis); the
// innermost axis is resolved exactly as an interval [0, t*), t* found in
// closed form for a single innermost-dependent generator and otherwise by
// monotone bisection. The fitted slope estimates twice the threshold, up
// to logarithmic corrections. Supports dim <= 3 only.
OracleReport sublevel_volume_oracle(const MonomialIdeal& ideal,
                                    const std::vector<Rational>& radii,
                                    int grid_points = 2000);

} // namespace lctforge
