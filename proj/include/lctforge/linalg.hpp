#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lctforge/rational.hpp"

namespace lctforge {

using QVector = std::vector<Rational>;

// Dense rational matrix, row-major.
struct QMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_symmetric() const;
};

Rational dot(const QVector& x, const QVector& y);

QVector operator+(const QVector& x, const QVector& y);
QVector operator-(const QVector& x, const QVector& y);
QVector operator*(const Rational& c, const QVector& x);

// Exact determinant by fraction-free Gaussian elimination.
Rational determinant(QMatrix m);

// Sylvester test: M is negative definite iff (-1)^i det(M_i) > 0 for every
// leading principal minor M_i. M must be symmetric. An empty matrix is
// vacuously negative definite.
bool is_negative_definite(const QMatrix& m);

// Solves A x = b exactly. Returns nullopt when A is singular.
std::optional<QVector> solve_linear(QMatrix A, QVector b);

} // namespace lctforge
