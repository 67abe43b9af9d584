#pragma once

#include <vector>

#include "lctforge/linalg.hpp"
#include "lctforge/monomial_ideal.hpp"

namespace lctforge {

// Convex hull of the generator exponents plus the nonnegative orthant.
// Generators are kept rational so that the pointwise scaling r*P is just
// another polyhedron of the same kind.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(const MonomialIdeal& ideal);
    NewtonPolyhedron(int dim, std::vector<QVector> generators);

    int dim() const { return dim_; }
    const std::vector<QVector>& generators() const { return gens_; }

    // The polyhedron of the unit ideal; it contains the origin.
    bool contains_origin() const;

    NewtonPolyhedron scaled(const Rational& r) const;

    std::string str() const;

private:
    int dim_;
    std::vector<QVector> gens_;
};

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

// Exact membership in conv(gens) + orthant, via LP feasibility:
// exists lambda >= 0, sum lambda = 1, sum lambda_i a_i <= p componentwise.
bool contains(const NewtonPolyhedron& P, const QVector& p);

// Interior test by retraction along the all-ones direction: true iff
// max{ delta : p - delta*1 in P } > 0. Valid because the recession cone is
// the full orthant, so P is full-dimensional.
bool interior_contains(const NewtonPolyhedron& P, const QVector& p);

// The unique m with m*(1,...,1) on the boundary of P, as the LP
//   minimize t  s.t.  exists lambda >= 0, sum lambda = 1,
//                     sum lambda_i a_i <= t*1.
// Throws MathError for the unit polyhedron ("threshold undefined (+inf)").
// When witness is non-null it receives the optimal convex weights.
Rational diagonal_parameter(const NewtonPolyhedron& P, QVector* witness = nullptr);

struct LctReport {
    bool infinite = false;   // unit ideal sentinel
    Rational m;              // diagonal parameter, valid iff !infinite
    Rational c;              // 1/m, valid iff !infinite
    QVector witness;         // convex weights certifying m*1 in P
};

LctReport lct(const MonomialIdeal& ideal);

// All lattice points lambda with |lambda| <= degree_bound and
// lambda + 1 in Int(r*P). Returned in lexicographic order.
std::vector<Exponents> multiplier_ideal_monomials(const MonomialIdeal& ideal,
                                                  const Rational& r, long degree_bound);

} // namespace lctforge
