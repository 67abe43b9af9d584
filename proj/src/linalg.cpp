#include "lctforge/linalg.hpp"

#include "lctforge/errors.hpp"

namespace lctforge {

bool QMatrix::is_symmetric() const {
    if (rows != cols) return false;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Rational dot(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw InputError("dot: dimension mismatch");
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

QVector operator+(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw InputError("vector add: dimension mismatch");
    QVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

QVector operator-(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw InputError("vector sub: dimension mismatch");
    QVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

QVector operator*(const Rational& c, const QVector& x) {
    QVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Rational determinant(QMatrix m) {
    if (m.rows != m.cols) throw InputError("determinant: matrix not square");
    const std::size_t n = m.rows;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            Rational f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

bool is_negative_definite(const QMatrix& m) {
    if (!m.is_symmetric()) throw InputError("is_negative_definite: matrix not symmetric");
    const std::size_t n = m.rows;
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
        Rational d = determinant(lead);
        // (-1)^k det > 0
        if (k % 2 == 0 ? d <= Rational(0) : d >= Rational(0)) return false;
    }
    return true;
}

std::optional<QVector> solve_linear(QMatrix A, QVector b) {
    if (A.rows != A.cols || A.rows != b.size())
        throw InputError("solve_linear: dimension mismatch");
    const std::size_t n = A.rows;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && A.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(pivot, j), A.at(k, j));
            std::swap(b[pivot], b[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A.at(i, k).is_zero()) continue;
            Rational f = A.at(i, k) / A.at(k, k);
            for (std::size_t j = k; j < n; ++j) A.at(i, j) -= f * A.at(k, j);
            b[i] -= f * b[k];
        }
    }
    QVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s = b[ii];
        for (std::size_t j = ii + 1; j < n; ++j) s -= A.at(ii, j) * x[j];
        x[ii] = s / A.at(ii, ii);
    }
    return x;
}

} // namespace lctforge
