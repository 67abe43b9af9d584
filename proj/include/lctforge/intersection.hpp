#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lctforge/linalg.hpp"

namespace lctforge {

// Named basis of (1,1)-classes on an n-dimensional ambient space. All
// class arithmetic happens against this basis; the intersection numbers
// are user-declared data, never derived from geometry.
struct ClassBasis {
    std::vector<std::string> names;
    int manifold_dim = 0;

    ClassBasis() = default;
    ClassBasis(std::vector<std::string> n, int dim);
    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;  // -1 when absent
};

// Symmetric multilinear form of arity manifold_dim, stored on sorted index
// multisets. Missing entries evaluate to zero.
class IntersectionForm {
public:
    IntersectionForm() = default;
    IntersectionForm(int arity, std::size_t basis_size)
        : arity_(arity), basis_size_(basis_size) {}

    int arity() const { return arity_; }
    std::size_t basis_size() const { return basis_size_; }

    void set(std::vector<int> indices, Rational value);
    const Rational& get(std::vector<int> indices) const;

private:
    int arity_ = 0;
    std::size_t basis_size_ = 0;
    std::map<std::vector<int>, Rational> tensor_;
};

// Coefficient vector over the basis.
struct DivisorClass {
    QVector coeffs;

    bool operator==(const DivisorClass&) const = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator*(const Rational& c, const DivisorClass& a);

// Multilinear extension of the form: exactly arity() classes.
Rational intersect(const IntersectionForm& form, std::span<const DivisorClass> classes);
Rational intersect(const IntersectionForm& form,
                   std::initializer_list<DivisorClass> classes);

// sum_{j=0}^{m} C(m,j) a^j * intersect(A^{m-j}, B^j, rest...): the exact
// expansion of (A + a*B)^m against the remaining arguments.
Rational power_pair(const IntersectionForm& form, const DivisorClass& A,
                    const DivisorClass& B, const Rational& a, int m,
                    std::span<const DivisorClass> rest);

} // namespace lctforge
