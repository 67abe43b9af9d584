#pragma once

#include <string>
#include <vector>

#include "lctforge/intersection.hpp"

namespace lctforge {

// Surface input: a rank-2 intersection form over a declared basis plus a
// finite list of irreducible candidate curves asserted to span the
// relevant effective support.
struct SurfaceData {
    ClassBasis basis;            // manifold_dim must be 2
    IntersectionForm form;       // arity 2
    std::vector<DivisorClass> candidates;
    std::vector<std::string> candidate_names;

    void validate() const;
    Rational pair(const DivisorClass& a, const DivisorClass& b) const;
};

struct ZariskiCertificates {
    std::vector<Rational> nef_values;   // P . C for every candidate
    std::vector<Rational> orth_values;  // P . C_j over the support
    bool gram_negative_definite = false;
};

struct ZariskiDecomposition {
    DivisorClass P;
    std::vector<std::pair<std::size_t, Rational>> N;  // (candidate index, a_j >= 0)
    ZariskiCertificates certificates;

    DivisorClass negative_part(const SurfaceData& data) const;
};

// Classical decomposition by iterative support enlargement: start from the
// candidates meeting D negatively, solve (sum a_j C_j) . C_i = D . C_i on
// the support, and grow the support by every candidate the remainder still
// meets negatively. Terminates since the support only grows. Throws
// MathError("invalid curve configuration") on a singular or non
// negative-definite Gram matrix and MathError("class not pseudo-effective
// relative to candidates") when a coefficient is negative at the fixed
// point.
ZariskiDecomposition zariski_decompose(const DivisorClass& D, const SurfaceData& data);

// Nef-part pairing <alpha . beta> = P_alpha . P_beta.
Rational positive_product(const DivisorClass& alpha, const DivisorClass& beta,
                          const SurfaceData& data);

struct Q1Report {
    bool identity_holds = false;  // alpha == P + sum a_j C_j, exact
    ZariskiDecomposition decomposition;
    // (candidate index, multiplicity nu(alpha, D_j), positive?)
    std::vector<std::tuple<std::size_t, Rational, bool>> multiplicities;
};

// Degree-one decomposition check: alpha = <alpha> + sum nu(alpha, D_j)[D_j].
Q1Report verify_q1_decomposition(const DivisorClass& alpha, const SurfaceData& data);

// True iff the negative part vanishes relative to the candidate set;
// cross-checked against alpha^2 = <alpha^2> on success.
bool nef_criterion(const DivisorClass& alpha, const SurfaceData& data);

} // namespace lctforge
