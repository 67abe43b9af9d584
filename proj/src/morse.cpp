#include "lctforge/morse.hpp"

#include "lctforge/errors.hpp"

namespace lctforge {
namespace {

// [(L + c u)^{n-s} . Y] expanded against the table L^{n-s-j} u^j [Y].
Rational expand_component(const std::vector<Rational>& mixed_LuY, int n_minus_s,
                          const Rational& c) {
    Rational sum(0);
    for (int j = 0; j <= n_minus_s; ++j)
        sum += binomial(n_minus_s, j) * Rational::pow(c, j) * mixed_LuY[j];
    return sum;
}

Rational main_alternating_sum(const MorseInput& in) {
    Rational sum(0);
    for (int j = 0; j <= in.s; ++j) {
        Rational term = binomial(in.n, j) * in.mixed_LF[j];
        sum += (in.s - j) % 2 == 0 ? term : -term;
    }
    return sum;
}

} // namespace

void MorseInput::validate() const {
    if (n <= 0) throw InputError("morse input: n must be positive");
    if (s < 0 || s > n) throw InputError("morse input: need 0 <= s <= n");
    if (mixed_LF.size() != static_cast<std::size_t>(s + 1))
        throw InputError("morse input: mixed_LF must have s+1 entries");
    for (const auto& comp : components) {
        if (comp.mixed_LuY.size() != static_cast<std::size_t>(n - s + 1))
            throw InputError("morse input: component table must have n-s+1 entries");
        if (comp.nu <= Rational(0))
            throw InputError("morse input: component multiplicities must be positive");
        if (comp.nu_prime < Rational(0))
            throw InputError("morse input: nu' must be nonnegative");
    }
    if (fs_exceeds_positive_part && components.empty() && s > 0)
        throw InputError("morse input: F^s asserted to differ from its positive part "
                         "but no components were supplied");
}

BoundReport strong_morse_bound(const MorseInput& input) {
    input.validate();
    BoundReport rep;
    rep.formula_id = "strong";
    Rational main = main_alternating_sum(input);
    rep.contributions.emplace_back("alternating L/F sum", main);
    Rational total = main;
    for (std::size_t t = 0; t < input.components.size(); ++t) {
        const auto& comp = input.components[t];
        Rational part = binomial(input.n, input.s) *
                        expand_component(comp.mixed_LuY, input.n - input.s, comp.nu_prime) *
                        comp.nu;
        std::string label = comp.label.empty() ? "component " + std::to_string(t + 1)
                                               : comp.label;
        rep.contributions.emplace_back(label, part);
        total += part;
    }
    rep.coefficient = total;
    return rep;
}

BoundReport second_formulation_bound(const MorseInput& input) {
    input.validate();
    BoundReport rep;
    rep.formula_id = "second";
    Rational main = main_alternating_sum(input);
    rep.contributions.emplace_back("alternating L/F sum", main);
    Rational total = main;
    Rational b(0);
    for (const auto& comp : input.components)
        if (comp.nu_prime > b) b = comp.nu_prime;
    for (std::size_t t = 0; t < input.components.size(); ++t) {
        const auto& comp = input.components[t];
        Rational part = binomial(input.n, input.s) *
                        expand_component(comp.mixed_LuY, input.n - input.s, b) * comp.nu;
        std::string label = comp.label.empty() ? "component " + std::to_string(t + 1)
                                               : comp.label;
        rep.contributions.emplace_back(label, part);
        total += part;
    }
    rep.coefficient = total;
    return rep;
}

BoundReport nef_case_bound(int n, int s, const std::vector<Rational>& table) {
    if (n <= 0 || s < 0 || s > n) throw InputError("nef bound: need 0 <= s <= n");
    if (table.size() != static_cast<std::size_t>(s + 1))
        throw InputError("nef bound: table must have s+1 entries");
    BoundReport rep;
    rep.formula_id = "nef";
    Rational total(0);
    for (int j = 0; j <= s; ++j) {
        Rational term = binomial(n, j) * table[j];
        if ((s - j) % 2 != 0) term = -term;
        total += term;
    }
    rep.coefficient = total;
    rep.contributions.emplace_back("alternating L/F sum", total);
    return rep;
}

BoundReport trapani_s1_bound(int n, const Rational& L_pow_n,
                             const Rational& L_pow_n1_posF,
                             const std::vector<TrapaniDivisor>& divisors) {
    if (n <= 0) throw InputError("trapani bound: n must be positive");
    for (const auto& d : divisors)
        if (d.mixed_LuD.size() != static_cast<std::size_t>(n))
            throw InputError("trapani bound: divisor table must have n entries");
    BoundReport rep;
    rep.formula_id = "trapani-s1";
    Rational main = L_pow_n - Rational(n) * L_pow_n1_posF;
    rep.contributions.emplace_back("L^n - n L^{n-1}<F>", main);
    Rational total = main;
    for (std::size_t j = 0; j < divisors.size(); ++j) {
        const auto& d = divisors[j];
        Rational part = -Rational(n) * expand_component(d.mixed_LuD, n - 1, d.nu) * d.nu;
        std::string label = d.label.empty() ? "divisor " + std::to_string(j + 1) : d.label;
        rep.contributions.emplace_back(label, part);
        total += part;
    }
    rep.coefficient = total;
    return rep;
}

BoundReport surface_morse(const DivisorClass& L, const DivisorClass& F,
                          const SurfaceData& data, const DivisorClass& u) {
    data.validate();
    for (const auto& c : data.candidates)
        if (data.pair(L, c) < Rational(0))
            throw MathError("surface pipeline: L is not nef on the candidate set");
    ZariskiDecomposition zd = zariski_decompose(F, data);

    MorseInput in;
    in.n = 2;
    in.s = 1;
    in.mixed_LF = {data.pair(L, L), data.pair(L, zd.P)};
    for (const auto& [idx, a] : zd.N) {
        MorseComponent comp;
        comp.label = idx < data.candidate_names.size() ? data.candidate_names[idx] : "";
        comp.nu = a;
        comp.nu_prime = a;
        comp.mixed_LuY = {data.pair(L, data.candidates[idx]),
                          data.pair(u, data.candidates[idx])};
        in.components.push_back(std::move(comp));
    }
    BoundReport rep = strong_morse_bound(in);
    rep.user_assertions.push_back(
        "u asserted admissible: its required positivity on the projectivized "
        "tangent bundle is not derivable from intersection data");
    return rep;
}

} // namespace lctforge
