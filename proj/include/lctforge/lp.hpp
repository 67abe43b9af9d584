#pragma once

#include <vector>

#include "lctforge/linalg.hpp"

namespace lctforge {

enum class Relation { LessEq, Equal, GreaterEq };
enum class Sense { Minimize, Maximize };
enum class LPStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
    QVector coeffs;
    Relation rel = Relation::LessEq;
    Rational rhs;
};

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational value;   // valid iff status == Optimal
    QVector witness;  // optimal point, valid iff status == Optimal
};

// Exact rational LP over free variables. Two-phase simplex with Bland's
// pivoting rule, hence terminating and deterministic for a fixed input
// ordering. An empty objective means a pure feasibility check (value 0).
// Instances are expected to be tiny; no attempt is made at sparse or
// revised variants.
LPResult lp_solve(const QVector& objective, const std::vector<Constraint>& constraints,
                  Sense sense);

} // namespace lctforge
