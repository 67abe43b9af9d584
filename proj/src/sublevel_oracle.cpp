#include "lctforge/sublevel_oracle.hpp"

#include <cmath>
#include <cstddef>

#include "lctforge/errors.hpp"

namespace lctforge {
namespace {

double ipow(double base, long e) {
    double r = 1.0;
    while (e-- > 0) r *= base;
    return r;
}

// Largest u in [0,1] with sum_i c_i u^{e_i} <= r, the sum being monotone
// nondecreasing in u. c_free collects the u-independent part.
double inner_threshold(double c_free, const std::vector<std::pair<double, long>>& dep,
                       double r) {
    if (c_free >= r) return 0.0;
    if (dep.empty()) return 1.0;
    if (dep.size() == 1) {
        const auto& [c, e] = dep[0];
        if (c <= 0.0) return 1.0;
        double t = std::pow((r - c_free) / c, 1.0 / static_cast<double>(e));
        return t > 1.0 ? 1.0 : t;
    }
    auto g = [&](double u) {
        double s = c_free;
        for (const auto& [c, e] : dep) s += c * ipow(u, e);
        return s;
    };
    if (g(1.0) < r) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (g(mid) < r ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Moduli below exp(kLogFloor) carry under 1e-18 of the weight s ds and are
// dropped from the outer grid.
constexpr double kLogFloor = -20.8;  // ~ ln(1e-9)

} // namespace

std::vector<Rational> default_oracle_radii(int count) {
    // Rational approximations of a log grid between 1/1000 and 1/10:
    // r_k = 10^(-3 + 2k/(count-1)) rounded to den 10^6.
    std::vector<Rational> out;
    for (int k = 0; k < count; ++k) {
        double x = std::pow(10.0, -3.0 + 2.0 * k / (count - 1));
        long num = std::lround(x * 1000000.0);
        if (num < 1) num = 1;
        out.emplace_back(num, 1000000L);
    }
    return out;
}

OracleReport sublevel_volume_oracle(const MonomialIdeal& ideal,
                                    const std::vector<Rational>& radii,
                                    int grid_points) {
    const int n = ideal.dim();
    if (n > 3) throw InputError("sublevel oracle: unsupported in dimension > 3");
    if (grid_points < 2) throw InputError("sublevel oracle: grid too small");
    if (radii.empty()) throw InputError("sublevel oracle: no radii");
    for (const auto& r : radii)
        if (r <= Rational(0) || r >= Rational(1))
            throw InputError("sublevel oracle: radii must lie in (0,1)");

    const auto& gens = ideal.generators();
    const int inner = n - 1;
    const double two_pi = 2.0 * std::acos(-1.0);

    // Outer axes use the composite midpoint rule on the log-substituted
    // integral (s = e^sigma turns the weight s ds into e^{2 sigma} d sigma),
    // which resolves the corner where the sublevel mass concentrates. The
    // innermost axis is an exact interval.
    const double h = -kLogFloor / grid_points;
    std::vector<double> mid_s(inner > 0 ? grid_points : 0);
    std::vector<double> mid_weight(inner > 0 ? grid_points : 0);
    for (int k = 0; k < grid_points && inner > 0; ++k) {
        double sigma = kLogFloor + (k + 0.5) * h;
        mid_s[k] = std::exp(sigma);
        mid_weight[k] = std::exp(2.0 * sigma) * h;
    }
    // Per-generator, per-axis powers of the midpoints.
    std::vector<std::vector<std::vector<double>>> powers(
        gens.size(), std::vector<std::vector<double>>(inner));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (int j = 0; j < inner; ++j) {
            powers[g][j].resize(grid_points);
            for (int k = 0; k < grid_points; ++k)
                powers[g][j][k] = ipow(mid_s[k], gens[g][j]);
        }

    OracleReport rep;
    for (const auto& rq : radii) {
        const double r = rq.to_double();
        double acc = 0.0;
        if (n == 1) {
            double c_free = 0.0;
            std::vector<std::pair<double, long>> dep;
            for (const auto& g : gens) {
                if (g[0] == 0) c_free += 1.0;
                else dep.emplace_back(1.0, g[0]);
            }
            double t = inner_threshold(c_free, dep, r);
            acc = 0.5 * t * t;
        } else {
            std::vector<long> idx(inner, 0);
            std::vector<std::pair<double, long>> dep;
            for (;;) {
                double weight = 1.0;
                for (int j = 0; j < inner; ++j) weight *= mid_weight[idx[j]];
                double c_free = 0.0;
                dep.clear();
                for (std::size_t g = 0; g < gens.size(); ++g) {
                    double c = 1.0;
                    for (int j = 0; j < inner; ++j) c *= powers[g][j][idx[j]];
                    if (gens[g][inner] == 0) c_free += c;
                    else dep.emplace_back(c, gens[g][inner]);
                }
                double t = inner_threshold(c_free, dep, r);
                acc += weight * 0.5 * t * t;

                int pos = inner - 1;
                while (pos >= 0 && ++idx[pos] == grid_points) idx[pos--] = 0;
                if (pos < 0) break;
            }
        }
        OraclePoint pt;
        pt.r = r;
        pt.volume = acc * ipow(two_pi, n);
        rep.points.push_back(pt);
    }

    // Pairwise slopes plus a least-squares fit of log V against log r.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::size_t k = rep.points.size();
    for (std::size_t i = 0; i < k; ++i) {
        double lx = std::log(rep.points[i].r);
        double ly = std::log(rep.points[i].volume);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        if (i > 0) {
            double dlx = lx - std::log(rep.points[i - 1].r);
            double dly = ly - std::log(rep.points[i - 1].volume);
            rep.points[i].local_slope = dly / dlx;
        }
    }
    if (k >= 2) {
        rep.fitted_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        rep.points[0].local_slope = rep.points[1].local_slope;
    }
    return rep;
}

} // namespace lctforge
