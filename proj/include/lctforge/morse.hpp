#pragma once

#include <string>
#include <vector>

#include "lctforge/zariski.hpp"

namespace lctforge {

// One codimension-s component of the non-nef locus: nu is the multiplicity
// of F^s along it, nu_prime the multiplicity of F itself, and mixed_LuY
// the intersection numbers L^{n-s-j} u^j [Y] for j = 0..n-s.
struct MorseComponent {
    std::string label;
    Rational nu;
    Rational nu_prime;
    std::vector<Rational> mixed_LuY;
};

// Table input for the bound evaluators. mixed_LF holds L^{n-j}<F^j> for
// j = 0..s. The component list is always finite here; an input asserting
// F^s != <F^s> with no components is rejected as inconsistent.
struct MorseInput {
    int n = 0;
    int s = 0;
    std::vector<Rational> mixed_LF;
    std::vector<MorseComponent> components;
    bool fs_exceeds_positive_part = false;  // user assertion that F^s != <F^s>

    void validate() const;
};

struct BoundReport {
    std::string formula_id;
    Rational coefficient;  // of k^n / n!
    std::vector<std::pair<std::string, Rational>> contributions;  // sums to coefficient
    // Hypotheses taken on the user's word, e.g. the positivity demanded of
    // the auxiliary class u, which intersection data cannot certify.
    std::vector<std::string> user_assertions;
};

// sum_{j<=s} C(n,j)(-1)^{s-j} L^{n-j}<F^j>
//   + sum_t C(n,s) [(L + nu'_t u)^{n-s} . Y_t] nu_t, expanded binomially
// against the component tables.
BoundReport strong_morse_bound(const MorseInput& input);

// Same main sum, with every nu'_t replaced by b = max_t nu'_t.
BoundReport second_formulation_bound(const MorseInput& input);

// Nef case: sum_{j<=s} (-1)^{s-j} C(n,j) table[j] with table[j] = L^{n-j}F^j.
BoundReport nef_case_bound(int n, int s, const std::vector<Rational>& table);

struct TrapaniDivisor {
    std::string label;
    Rational nu;                       // nu(F, D_j)
    std::vector<Rational> mixed_LuD;   // L^{n-1-i} u^i [D_j], i = 0..n-1
};

// Lower bound for limsup (n!/k^n) h^0(k(L-F)):
//   L^n - n L^{n-1}<F> - n sum_j [(L + nu_j u)^{n-1} . D_j] nu_j.
BoundReport trapani_s1_bound(int n, const Rational& L_pow_n,
                             const Rational& L_pow_n1_posF,
                             const std::vector<TrapaniDivisor>& divisors);

// Surface pipeline (n = 2, s = 1): decomposes F, reads <F> = P_F and the
// component data off the negative part, fills the tables by intersection
// and delegates to strong_morse_bound. L is required to be nef on the
// candidate set; u is accepted as a user assertion.
BoundReport surface_morse(const DivisorClass& L, const DivisorClass& F,
                          const SurfaceData& data, const DivisorClass& u);

} // namespace lctforge
