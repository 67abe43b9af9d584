#include "lctforge/newton.hpp"

#include <algorithm>

#include "lctforge/errors.hpp"
#include "lctforge/lp.hpp"

namespace lctforge {
namespace {

void check_dim(const NewtonPolyhedron& P, const QVector& p) {
    if (static_cast<int>(p.size()) != P.dim())
        throw InputError("newton polyhedron: query dimension mismatch");
}

// Shared constraint block: lambda >= 0, sum lambda = 1, and for each
// coordinate j: sum_i lambda_i a_i[j] + t_coeff * t <= p[j]. Variables are
// [lambda_0..lambda_{k-1}, t]; t is unused when t_coeff = 0.
std::vector<Constraint> hull_constraints(const NewtonPolyhedron& P, const QVector& rhs,
                                         const Rational& t_coeff) {
    const auto& gens = P.generators();
    const std::size_t k = gens.size();
    const std::size_t nvars = k + 1;
    std::vector<Constraint> cons;
    for (int j = 0; j < P.dim(); ++j) {
        Constraint c;
        c.coeffs.assign(nvars, Rational(0));
        for (std::size_t i = 0; i < k; ++i) c.coeffs[i] = gens[i][j];
        c.coeffs[k] = t_coeff;
        c.rel = Relation::LessEq;
        c.rhs = rhs.empty() ? Rational(0) : rhs[j];
        cons.push_back(std::move(c));
    }
    Constraint sum;
    sum.coeffs.assign(nvars, Rational(1));
    sum.coeffs[k] = Rational(0);
    sum.rel = Relation::Equal;
    sum.rhs = Rational(1);
    cons.push_back(std::move(sum));
    for (std::size_t i = 0; i < k; ++i) {
        Constraint nn;
        nn.coeffs.assign(nvars, Rational(0));
        nn.coeffs[i] = Rational(1);
        nn.rel = Relation::GreaterEq;
        nn.rhs = Rational(0);
        cons.push_back(std::move(nn));
    }
    return cons;
}

} // namespace

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& ideal) : dim_(ideal.dim()) {
    for (const auto& g : ideal.generators()) {
        QVector v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = Rational(g[i]);
        gens_.push_back(std::move(v));
    }
}

NewtonPolyhedron::NewtonPolyhedron(int dim, std::vector<QVector> generators)
    : dim_(dim), gens_(std::move(generators)) {
    if (gens_.empty()) throw InputError("newton polyhedron: no generators");
    for (const auto& g : gens_)
        if (static_cast<int>(g.size()) != dim_)
            throw InputError("newton polyhedron: generator arity != dim");
}

bool NewtonPolyhedron::contains_origin() const {
    for (const auto& g : gens_) {
        bool zero = std::all_of(g.begin(), g.end(), [](const Rational& e) { return e.is_zero(); });
        if (zero) return true;
    }
    return false;
}

NewtonPolyhedron NewtonPolyhedron::scaled(const Rational& r) const {
    if (r < Rational(0)) throw InputError("newton polyhedron: negative scale");
    std::vector<QVector> g2;
    for (const auto& g : gens_) g2.push_back(r * g);
    return NewtonPolyhedron(dim_, std::move(g2));
}

std::string NewtonPolyhedron::str() const {
    std::string out = "conv{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += "(";
        for (std::size_t j = 0; j < gens_[i].size(); ++j) {
            if (j) out += ",";
            out += gens_[i][j].str();
        }
        out += ")";
    }
    return out + "} + orthant";
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
    return NewtonPolyhedron(ideal);
}

bool contains(const NewtonPolyhedron& P, const QVector& p) {
    check_dim(P, p);
    // Feasibility only; the t column is inert (all coefficients zero).
    auto cons = hull_constraints(P, p, Rational(0));
    LPResult res = lp_solve(QVector(P.generators().size() + 1, Rational(0)), cons,
                            Sense::Minimize);
    return res.status == LPStatus::Optimal;
}

bool interior_contains(const NewtonPolyhedron& P, const QVector& p) {
    check_dim(P, p);
    // maximize delta s.t. sum lambda_i a_i + delta*1 <= p; always optimal
    // since lambda >= 0 and a_i >= 0 bound delta by min_j p[j].
    auto cons = hull_constraints(P, p, Rational(1));
    QVector obj(P.generators().size() + 1, Rational(0));
    obj.back() = Rational(1);
    LPResult res = lp_solve(obj, cons, Sense::Maximize);
    if (res.status != LPStatus::Optimal)
        throw MathError("interior test: retraction LP not optimal");
    return res.value > Rational(0);
}

Rational diagonal_parameter(const NewtonPolyhedron& P, QVector* witness) {
    if (P.contains_origin())
        throw MathError("threshold undefined (+inf): unit polyhedron");
    // minimize t s.t. sum lambda_i a_i <= t*1.
    auto cons = hull_constraints(P, {}, Rational(-1));
    QVector obj(P.generators().size() + 1, Rational(0));
    obj.back() = Rational(1);
    LPResult res = lp_solve(obj, cons, Sense::Minimize);
    if (res.status != LPStatus::Optimal)
        throw MathError("diagonal parameter LP not optimal");
    if (witness) {
        witness->assign(res.witness.begin(), res.witness.end() - 1);
    }
    return res.value;
}

LctReport lct(const MonomialIdeal& ideal) {
    LctReport rep;
    if (ideal.is_unit()) {
        rep.infinite = true;
        return rep;
    }
    NewtonPolyhedron P(ideal);
    rep.m = diagonal_parameter(P, &rep.witness);
    rep.c = rep.m.reciprocal();
    return rep;
}

std::vector<Exponents> multiplier_ideal_monomials(const MonomialIdeal& ideal,
                                                  const Rational& r, long degree_bound) {
    if (r < Rational(0)) throw InputError("multiplier ideal: r must be >= 0");
    if (degree_bound < 0) throw InputError("multiplier ideal: negative degree bound");
    NewtonPolyhedron rP = NewtonPolyhedron(ideal).scaled(r);
    const int n = ideal.dim();

    std::vector<Exponents> out;
    Exponents lambda(n, 0);
    // Odometer over all lambda with |lambda| <= degree_bound, lex order.
    for (;;) {
        long total = 0;
        for (long e : lambda) total += e;
        if (total <= degree_bound) {
            QVector shifted(n);
            for (int i = 0; i < n; ++i) shifted[i] = Rational(lambda[i] + 1);
            if (interior_contains(rP, shifted)) out.push_back(lambda);
        }
        int pos = n - 1;
        while (pos >= 0) {
            ++lambda[pos];
            long t = 0;
            for (long e : lambda) t += e;
            if (t <= degree_bound) break;
            lambda[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lctforge
