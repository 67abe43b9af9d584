#include "lctforge/lp.hpp"

#include <cstddef>

#include "lctforge/errors.hpp"

namespace lctforge {
namespace {

// Dense simplex tableau for min c.x, A x = b, x >= 0, b >= 0.
// Column layout: [structural vars | artificials], one artificial per row.
struct Tableau {
    std::size_t m = 0;       // rows
    std::size_t n = 0;       // structural columns
    std::vector<QVector> A;  // m rows of n + m entries
    QVector b;               // m entries, kept >= 0
    std::vector<std::size_t> basis;  // column index of the basic var per row

    std::size_t width() const { return n + m; }

    void pivot(std::size_t row, std::size_t col) {
        Rational p = A[row][col];
        for (auto& v : A[row]) v /= p;
        b[row] /= p;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            Rational f = A[i][col];
            for (std::size_t j = 0; j < width(); ++j) A[i][j] -= f * A[row][j];
            b[i] -= f * b[row];
        }
        basis[row] = col;
    }
};

// Reduced cost of column j for objective c restricted to allowed columns.
Rational reduced_cost(const Tableau& t, const QVector& c, std::size_t j) {
    Rational r = c[j];
    for (std::size_t i = 0; i < t.m; ++i) {
        const Rational& cb = c[t.basis[i]];
        if (!cb.is_zero()) r -= cb * t.A[i][j];
    }
    return r;
}

// Bland: entering = lowest-index column with negative reduced cost;
// leaving = lowest ratio, ties by lowest basic column index.
// Returns true when optimal, false when unbounded along `unbounded_col`.
bool run_simplex(Tableau& t, const QVector& c, std::size_t active_cols, bool& unbounded) {
    unbounded = false;
    for (;;) {
        std::size_t enter = active_cols;
        for (std::size_t j = 0; j < active_cols; ++j) {
            bool basic = false;
            for (std::size_t i = 0; i < t.m; ++i)
                if (t.basis[i] == j) { basic = true; break; }
            if (basic) continue;
            if (reduced_cost(t, c, j) < Rational(0)) { enter = j; break; }
        }
        if (enter == active_cols) return true;

        std::size_t leave = t.m;
        Rational best;
        for (std::size_t i = 0; i < t.m; ++i) {
            if (t.A[i][enter] <= Rational(0)) continue;
            Rational ratio = t.b[i] / t.A[i][enter];
            if (leave == t.m || ratio < best ||
                (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == t.m) { unbounded = true; return false; }
        t.pivot(leave, enter);
    }
}

} // namespace

LPResult lp_solve(const QVector& objective, const std::vector<Constraint>& constraints,
                  Sense sense) {
    std::size_t nvars = objective.size();
    if (nvars == 0) {
        for (const auto& c : constraints) nvars = std::max(nvars, c.coeffs.size());
    }
    for (const auto& c : constraints)
        if (c.coeffs.size() != nvars)
            throw InputError("lp_solve: constraint dimension mismatch");

    QVector obj = objective.empty() ? QVector(nvars) : objective;
    if (sense == Sense::Maximize)
        for (auto& v : obj) v = -v;

    const std::size_t m = constraints.size();
    // Free variables split as x = u - v; one slack/surplus per inequality.
    std::size_t nslack = 0;
    for (const auto& c : constraints)
        if (c.rel != Relation::Equal) ++nslack;

    Tableau t;
    t.m = m;
    t.n = 2 * nvars + nslack;
    t.A.assign(m, QVector(t.n + m));
    t.b.assign(m, Rational(0));
    t.basis.assign(m, 0);

    std::size_t slack_at = 2 * nvars;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        for (std::size_t j = 0; j < nvars; ++j) {
            t.A[i][2 * j] = c.coeffs[j];
            t.A[i][2 * j + 1] = -c.coeffs[j];
        }
        if (c.rel == Relation::LessEq) t.A[i][slack_at++] = Rational(1);
        else if (c.rel == Relation::GreaterEq) t.A[i][slack_at++] = Rational(-1);
        t.b[i] = c.rhs;
        if (t.b[i] < Rational(0)) {
            for (auto& v : t.A[i]) v = -v;
            t.b[i] = -t.b[i];
        }
        t.A[i][t.n + i] = Rational(1);  // artificial
        t.basis[i] = t.n + i;
    }

    // Phase 1: minimize the sum of artificials.
    QVector phase1(t.n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[t.n + i] = Rational(1);
    bool unbounded = false;
    run_simplex(t, phase1, t.n + m, unbounded);
    Rational art_sum;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= t.n) art_sum += t.b[i];
    if (!art_sum.is_zero()) return {LPStatus::Infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis; an all-zero row is redundant.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < t.n) continue;
        std::size_t col = t.n;
        for (std::size_t j = 0; j < t.n; ++j)
            if (!t.A[i][j].is_zero()) { col = j; break; }
        if (col < t.n) t.pivot(i, col);
    }

    // Phase 2 over structural columns only.
    QVector phase2(t.n + m);
    for (std::size_t j = 0; j < nvars; ++j) {
        phase2[2 * j] = obj[j];
        phase2[2 * j + 1] = -obj[j];
    }
    // Rows still basic in an artificial (redundant equalities) are harmless:
    // the artificial stays at value 0 and its column is excluded below.
    if (!run_simplex(t, phase2, t.n, unbounded)) {
        if (unbounded) return {LPStatus::Unbounded, Rational(0), {}};
    }

    QVector split(t.n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < t.n) split[t.basis[i]] = t.b[i];
    QVector x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) x[j] = split[2 * j] - split[2 * j + 1];

    Rational value = obj.empty() ? Rational(0) : dot(obj, x);
    if (sense == Sense::Maximize) value = -value;
    return {LPStatus::Optimal, value, x};
}

} // namespace lctforge
