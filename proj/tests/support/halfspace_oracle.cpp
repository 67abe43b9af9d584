#include "halfspace_oracle.hpp"

#include <algorithm>

#include "lctforge/errors.hpp"

namespace lctforge::testsupport {
namespace {

QVector cross(const QVector& a, const QVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

bool nonneg(const QVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q >= Rational(0); });
}

bool nonzero(const QVector& v) {
    return std::any_of(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
}

void negate(QVector& v) {
    for (auto& q : v) q = -q;
}

} // namespace

HalfspaceOracle::HalfspaceOracle(const std::vector<QVector>& gens, int d) : dim(d) {
    if (d < 1 || d > 3) throw InputError("halfspace oracle: dim must be 1..3");

    std::vector<QVector> normals;
    for (int i = 0; i < d; ++i) {
        QVector e(d, Rational(0));
        e[i] = Rational(1);
        normals.push_back(e);
    }
    if (d == 2) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
            for (std::size_t j = i + 1; j < gens.size(); ++j) {
                QVector diff = gens[i] - gens[j];
                QVector n = {diff[1], -diff[0]};  // orthogonal to the edge
                if (!nonzero(n)) continue;
                if (!nonneg(n)) negate(n);
                if (nonneg(n)) normals.push_back(n);
            }
        }
    } else if (d == 3) {
        std::vector<QVector> dirs;
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j) dirs.push_back(gens[i] - gens[j]);
        for (int i = 0; i < 3; ++i) {
            QVector e(3, Rational(0));
            e[i] = Rational(1);
            dirs.push_back(e);
        }
        for (std::size_t i = 0; i < dirs.size(); ++i) {
            for (std::size_t j = i + 1; j < dirs.size(); ++j) {
                QVector n = cross(dirs[i], dirs[j]);
                if (!nonzero(n)) continue;
                if (!nonneg(n)) negate(n);
                if (nonneg(n)) normals.push_back(n);
            }
        }
    }

    for (auto& n : normals) {
        Rational b = dot(n, gens[0]);
        for (const auto& g : gens) b = std::min(b, dot(n, g));
        halfspaces.emplace_back(n, b);
    }
}

bool HalfspaceOracle::contains(const QVector& p) const {
    for (const auto& [n, b] : halfspaces)
        if (dot(n, p) < b) return false;
    return true;
}

bool HalfspaceOracle::interior_contains(const QVector& p) const {
    for (const auto& [n, b] : halfspaces)
        if (dot(n, p) <= b) return false;
    return true;
}

} // namespace lctforge::testsupport
