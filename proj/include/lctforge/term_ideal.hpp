#pragma once

#include <array>
#include <string>
#include <vector>

#include "lctforge/blowup.hpp"

namespace lctforge {

// One undetermined series in z introduced by a recentering; only its
// value-at-origin class matters for the reduction.
struct SeriesSymbol {
    std::string name;
    bool vanishes_at_origin = false;
};

// coeff * x^e0 * y^e1 * z^e2 * product of symbols (indices into the symbol
// table, with multiplicity).
struct Term {
    long long coeff = 1;
    std::array<long, 3> exps{0, 0, 0};
    std::vector<int> symbols;  // sorted
};

struct FormalSum {
    std::vector<Term> terms;
};

struct TermIdeal {
    std::vector<SeriesSymbol> symbols;
    std::vector<FormalSum> generators;

    std::string str() const;
};

FormalSum multiply(const FormalSum& a, const FormalSum& b);

// Reduces modulo the mandatory generator z at the chart origin:
//  (R1) a generator divisible by another is dropped;
//  (R2) modulo z a term is dropped when divisible by z or carrying a
//       symbol vanishing at the origin; surviving symbols are units and
//       are stripped as factors;
//  (R3) a trailing factor with a unit constant term is stripped, which
//       collapses x + G (G vanishing) to x.
// Expects to reach (x^h y^k, z); anything else throws StuckReduction.
NormalFormIdeal reduce_symbolic(const TermIdeal& ideal);

// Builds the pullback ideal of (x0, y0, z0) along a chart path by honest
// substitution. Every step recenters the next curve to {x = y = 0}; the
// recentering series all vanish at the origin of the new chart (the
// exponent recurrence encodes exactly that configuration), so the symbols
// are flagged accordingly.
TermIdeal term_ideal_for_path(const ChartPath& path);

} // namespace lctforge
