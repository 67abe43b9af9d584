#include "lctforge/intersection.hpp"

#include <algorithm>

#include "lctforge/errors.hpp"

namespace lctforge {

ClassBasis::ClassBasis(std::vector<std::string> n, int dim)
    : names(std::move(n)), manifold_dim(dim) {
    if (dim <= 0) throw InputError("class basis: manifold dimension must be positive");
    if (names.empty()) throw InputError("class basis: empty");
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw InputError("class basis: duplicate name '" + names[i] + "'");
}

int ClassBasis::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

void IntersectionForm::set(std::vector<int> indices, Rational value) {
    if (static_cast<int>(indices.size()) != arity_)
        throw InputError("intersection form: wrong number of indices");
    for (int i : indices)
        if (i < 0 || static_cast<std::size_t>(i) >= basis_size_)
            throw InputError("intersection form: index out of range");
    std::sort(indices.begin(), indices.end());
    tensor_[std::move(indices)] = std::move(value);
}

const Rational& IntersectionForm::get(std::vector<int> indices) const {
    static const Rational zero(0);
    std::sort(indices.begin(), indices.end());
    auto it = tensor_.find(indices);
    return it == tensor_.end() ? zero : it->second;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    return {a.coeffs + b.coeffs};
}
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    return {a.coeffs - b.coeffs};
}
DivisorClass operator*(const Rational& c, const DivisorClass& a) {
    return {c * a.coeffs};
}

Rational intersect(const IntersectionForm& form, std::span<const DivisorClass> classes) {
    if (static_cast<int>(classes.size()) != form.arity())
        throw InputError("intersect: expected exactly arity many classes");
    const std::size_t b = form.basis_size();
    for (const auto& c : classes)
        if (c.coeffs.size() != b) throw InputError("intersect: class/basis size mismatch");

    Rational total(0);
    std::vector<int> idx(classes.size(), 0);
    for (;;) {
        Rational prod(1);
        for (std::size_t i = 0; i < classes.size() && !prod.is_zero(); ++i)
            prod *= classes[i].coeffs[idx[i]];
        if (!prod.is_zero()) total += prod * form.get(idx);
        std::size_t pos = idx.size();
        while (pos > 0 && ++idx[pos - 1] == static_cast<int>(b)) idx[--pos] = 0;
        if (pos == 0) break;
    }
    return total;
}

Rational intersect(const IntersectionForm& form,
                   std::initializer_list<DivisorClass> classes) {
    std::vector<DivisorClass> v(classes);
    return intersect(form, std::span<const DivisorClass>(v));
}

Rational power_pair(const IntersectionForm& form, const DivisorClass& A,
                    const DivisorClass& B, const Rational& a, int m,
                    std::span<const DivisorClass> rest) {
    if (m < 0 || m > form.arity()) throw InputError("power_pair: bad power");
    if (static_cast<int>(rest.size()) != form.arity() - m)
        throw InputError("power_pair: rest arity mismatch");
    Rational total(0);
    for (int j = 0; j <= m; ++j) {
        std::vector<DivisorClass> args;
        for (int i = 0; i < m - j; ++i) args.push_back(A);
        for (int i = 0; i < j; ++i) args.push_back(B);
        args.insert(args.end(), rest.begin(), rest.end());
        total += binomial(m, j) * Rational::pow(a, j) * intersect(form, args);
    }
    return total;
}

} // namespace lctforge
