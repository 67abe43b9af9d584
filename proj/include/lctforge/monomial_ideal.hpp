#pragma once

#include <string>
#include <vector>

namespace lctforge {

using Exponents = std::vector<long>;

// Monomial ideal given by exponent vectors in N^n. Normalization keeps a
// minimal generating set: no generator dominates another componentwise.
// The unit ideal is represented by the single zero vector and flagged.
class MonomialIdeal {
public:
    MonomialIdeal(int dim, std::vector<Exponents> generators);

    int dim() const { return dim_; }
    const std::vector<Exponents>& generators() const { return gens_; }
    bool is_unit() const { return unit_; }

    // "x1^2*x2, x3" with variables x1..xn; '*' joins factors, '^' powers.
    static MonomialIdeal parse(const std::string& literal, int dim);

    std::string str() const;

private:
    int dim_;
    std::vector<Exponents> gens_;
    bool unit_ = false;
};

// Right-pads I's generators and left-pads J's: the ideal of the product
// space. The threshold is additive across this construction.
MonomialIdeal direct_sum(const MonomialIdeal& I, const MonomialIdeal& J);

} // namespace lctforge
