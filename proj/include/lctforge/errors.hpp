#pragma once

#include <stdexcept>
#include <string>

namespace lctforge {

// Malformed input: dimension mismatches, parse failures, out-of-range
// parameters. CLI maps this to exit status 2.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically meaningful failure on well-formed input: undefined
// threshold, invalid curve configuration, non-pseudo-effective class.
// CLI maps this to exit status 3.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// A symbolic reduction that did not reach a normal form. Carries the
// offending subexpression; signals a modeling bug, not a user error.
struct StuckReduction : MathError {
    explicit StuckReduction(const std::string& stuck)
        : MathError("symbolic reduction stuck at: " + stuck), stuck_term(stuck) {}
    std::string stuck_term;
};

} // namespace lctforge
