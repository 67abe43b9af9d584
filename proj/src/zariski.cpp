#include "lctforge/zariski.hpp"

#include <algorithm>

#include "lctforge/errors.hpp"

namespace lctforge {

void SurfaceData::validate() const {
    if (basis.manifold_dim != 2) throw InputError("surface data: manifold_dim must be 2");
    if (form.arity() != 2) throw InputError("surface data: form arity must be 2");
    if (form.basis_size() != basis.size())
        throw InputError("surface data: form/basis size mismatch");
    if (candidates.empty()) throw InputError("surface data: no candidate curves");
    for (const auto& c : candidates)
        if (c.coeffs.size() != basis.size())
            throw InputError("surface data: candidate/basis size mismatch");
}

Rational SurfaceData::pair(const DivisorClass& a, const DivisorClass& b) const {
    return intersect(form, {a, b});
}

DivisorClass ZariskiDecomposition::negative_part(const SurfaceData& data) const {
    DivisorClass n{QVector(data.basis.size(), Rational(0))};
    for (const auto& [idx, a] : N) n = n + a * data.candidates[idx];
    return n;
}

ZariskiDecomposition zariski_decompose(const DivisorClass& D, const SurfaceData& data) {
    data.validate();
    if (D.coeffs.size() != data.basis.size())
        throw InputError("zariski: class/basis size mismatch");

    const std::size_t ncand = data.candidates.size();
    std::vector<bool> in_support(ncand, false);
    for (std::size_t i = 0; i < ncand; ++i)
        if (data.pair(D, data.candidates[i]) < Rational(0)) in_support[i] = true;

    std::vector<std::size_t> support;
    QVector coeffs;
    DivisorClass P = D;

    for (;;) {
        support.clear();
        for (std::size_t i = 0; i < ncand; ++i)
            if (in_support[i]) support.push_back(i);

        if (support.empty()) {
            P = D;
            coeffs.clear();
        } else {
            const std::size_t k = support.size();
            QMatrix gram(k, k);
            QVector rhs(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j)
                    gram.at(i, j) =
                        data.pair(data.candidates[support[i]], data.candidates[support[j]]);
                rhs[i] = data.pair(D, data.candidates[support[i]]);
            }
            if (!is_negative_definite(gram))
                throw MathError("invalid curve configuration: support Gram matrix "
                                "is not negative definite");
            auto sol = solve_linear(gram, rhs);
            if (!sol) throw MathError("invalid curve configuration: singular Gram system");
            coeffs = *sol;
            P = D;
            for (std::size_t i = 0; i < k; ++i)
                P = P - coeffs[i] * data.candidates[support[i]];
        }

        // Grow the support by every candidate the remainder meets
        // negatively; adding all violators at once keeps the fixed point
        // independent of candidate order.
        bool grew = false;
        for (std::size_t i = 0; i < ncand; ++i) {
            if (in_support[i]) continue;
            if (data.pair(P, data.candidates[i]) < Rational(0)) {
                in_support[i] = true;
                grew = true;
            }
        }
        if (!grew) break;
    }

    ZariskiDecomposition out;
    out.P = P;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (coeffs[i] < Rational(0))
            throw MathError("class not pseudo-effective relative to candidates");
        if (!coeffs[i].is_zero()) out.N.emplace_back(support[i], coeffs[i]);
    }
    for (const auto& c : data.candidates)
        out.certificates.nef_values.push_back(data.pair(P, c));
    for (const auto& [idx, a] : out.N)
        out.certificates.orth_values.push_back(data.pair(P, data.candidates[idx]));
    {
        const std::size_t k = out.N.size();
        QMatrix gram(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                gram.at(i, j) = data.pair(data.candidates[out.N[i].first],
                                          data.candidates[out.N[j].first]);
        out.certificates.gram_negative_definite = is_negative_definite(gram);
    }
    return out;
}

Rational positive_product(const DivisorClass& alpha, const DivisorClass& beta,
                          const SurfaceData& data) {
    ZariskiDecomposition za = zariski_decompose(alpha, data);
    ZariskiDecomposition zb = zariski_decompose(beta, data);
    return data.pair(za.P, zb.P);
}

Q1Report verify_q1_decomposition(const DivisorClass& alpha, const SurfaceData& data) {
    Q1Report rep;
    rep.decomposition = zariski_decompose(alpha, data);
    DivisorClass recomposed = rep.decomposition.P + rep.decomposition.negative_part(data);
    rep.identity_holds = recomposed == alpha;
    for (const auto& [idx, a] : rep.decomposition.N)
        rep.multiplicities.emplace_back(idx, a, a > Rational(0));
    return rep;
}

bool nef_criterion(const DivisorClass& alpha, const SurfaceData& data) {
    ZariskiDecomposition z = zariski_decompose(alpha, data);
    if (!z.N.empty()) return false;
    // Cross-check: with empty negative part the self-intersection and the
    // positive product must agree exactly.
    Rational direct = data.pair(alpha, alpha);
    Rational positive = data.pair(z.P, z.P);
    if (direct != positive)
        throw MathError("nef criterion: empty negative part but alpha^2 != <alpha^2>");
    return true;
}

} // namespace lctforge
