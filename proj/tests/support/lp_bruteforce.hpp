#pragma once

// Brute-force LP optimum by basic-solution enumeration: every subset of n
// constraints taken with equality gives a candidate point; the optimum over
// feasible candidates matches the simplex answer whenever the feasible set
// is pointed (generators add box constraints to guarantee that). Used as
// the independent cross-check for lp_solve.

#include <optional>

#include "lctforge/lp.hpp"

namespace lctforge::testsupport {

struct BruteForceLP {
    bool feasible = false;
    Rational value;
    QVector argmin;
};

BruteForceLP brute_force_lp(const QVector& objective,
                            const std::vector<Constraint>& constraints, Sense sense);

} // namespace lctforge::testsupport
