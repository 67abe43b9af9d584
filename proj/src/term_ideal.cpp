#include "lctforge/term_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lctforge/errors.hpp"

namespace lctforge {
namespace {

std::string term_str(const Term& t, const std::vector<SeriesSymbol>& symbols) {
    std::string out;
    if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
    const char* vars = "xyz";
    bool any = false;
    for (int i = 0; i < 3; ++i) {
        if (t.exps[i] == 0) continue;
        if (any) out += "*";
        out += vars[i];
        if (t.exps[i] > 1) out += "^" + std::to_string(t.exps[i]);
        any = true;
    }
    for (int s : t.symbols) {
        if (any) out += "*";
        out += symbols[s].name;
        any = true;
    }
    if (!any) out += "1";
    return out;
}

std::string sum_str(const FormalSum& f, const std::vector<SeriesSymbol>& symbols) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        if (i) out += " + ";
        out += term_str(f.terms[i], symbols);
    }
    return out;
}

void merge_into(FormalSum& sum, Term t) {
    std::sort(t.symbols.begin(), t.symbols.end());
    for (auto& u : sum.terms) {
        if (u.exps == t.exps && u.symbols == t.symbols) {
            u.coeff += t.coeff;
            return;
        }
    }
    sum.terms.push_back(std::move(t));
}

using Mono = std::pair<long, long>;  // (x,y) exponents after reduction mod z

bool divides(const Mono& d, const Mono& m) {
    return d.first <= m.first && d.second <= m.second;
}

} // namespace

std::string TermIdeal::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += sum_str(generators[i], symbols);
    }
    return out + ")";
}

FormalSum multiply(const FormalSum& a, const FormalSum& b) {
    FormalSum out;
    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            Term t;
            t.coeff = ta.coeff * tb.coeff;
            for (int i = 0; i < 3; ++i) t.exps[i] = ta.exps[i] + tb.exps[i];
            t.symbols = ta.symbols;
            t.symbols.insert(t.symbols.end(), tb.symbols.begin(), tb.symbols.end());
            merge_into(out, std::move(t));
        }
    }
    return out;
}

NormalFormIdeal reduce_symbolic(const TermIdeal& ideal) {
    // Locate the mandatory pure-z generator.
    std::size_t z_at = ideal.generators.size();
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        const auto& g = ideal.generators[i];
        if (g.terms.size() == 1 && g.terms[0].symbols.empty() &&
            g.terms[0].exps == std::array<long, 3>{0, 0, 1}) {
            z_at = i;
            break;
        }
    }
    if (z_at == ideal.generators.size())
        throw StuckReduction("no generator equal to z; input is not a chart pullback");

    // Mod z: drop z-divisible terms and terms carrying a vanishing symbol;
    // remaining symbols are units at the origin and are stripped.
    struct Reduced {
        std::set<Mono> monos;
        bool resolved = false;
        Mono value{0, 0};
    };
    std::vector<Reduced> gens;
    for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
        if (i == z_at) continue;
        Reduced red;
        for (const auto& t : ideal.generators[i].terms) {
            if (t.coeff == 0 || t.exps[2] > 0) continue;
            bool vanishes = false;
            for (int s : t.symbols) {
                if (s < 0 || s >= static_cast<int>(ideal.symbols.size()))
                    throw InputError("term ideal: symbol index out of range");
                if (ideal.symbols[s].vanishes_at_origin) { vanishes = true; break; }
            }
            if (vanishes) continue;
            red.monos.insert({t.exps[0], t.exps[1]});
        }
        if (red.monos.empty()) continue;  // generator lies in (z)
        // Strip the unit cofactor: x^a y^b * (1 + higher) ~ x^a y^b.
        Mono low{red.monos.begin()->first, red.monos.begin()->second};
        for (const auto& m : red.monos) {
            low.first = std::min(low.first, m.first);
            low.second = std::min(low.second, m.second);
        }
        red.resolved = red.monos.count(low) > 0;
        red.value = low;
        gens.push_back(std::move(red));
    }

    // R1 until stable: a generator every monomial of which is divisible by
    // another generator's resolved monomial is redundant. Equal resolved
    // monomials keep the earliest occurrence.
    std::vector<bool> dropped(gens.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (dropped[i]) continue;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (i == j || dropped[j] || !gens[j].resolved) continue;
                bool all_div = true;
                if (gens[i].resolved) {
                    all_div = divides(gens[j].value, gens[i].value);
                    if (all_div && gens[i].value == gens[j].value && i < j) all_div = false;
                } else {
                    for (const auto& m : gens[i].monos)
                        if (!divides(gens[j].value, m)) { all_div = false; break; }
                }
                if (all_div) {
                    dropped[i] = true;
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::size_t> left;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!dropped[i]) left.push_back(i);
    if (left.size() != 1) {
        std::string what = left.empty() ? "all generators vanished mod z" : "";
        for (std::size_t i : left) {
            if (!what.empty()) what += " ; ";
            std::string part;
            for (const auto& m : gens[i].monos) {
                if (!part.empty()) part += " + ";
                part += "x^" + std::to_string(m.first) + "y^" + std::to_string(m.second);
            }
            what += part;
        }
        throw StuckReduction(what);
    }
    const Reduced& win = gens[left[0]];
    if (!win.resolved) {
        std::string what;
        for (const auto& m : win.monos) {
            if (!what.empty()) what += " + ";
            what += "x^" + std::to_string(m.first) + "y^" + std::to_string(m.second);
        }
        throw StuckReduction("unresolved generator " + what);
    }
    if (win.value.first == 0 && win.value.second == 0)
        throw StuckReduction("generator reduced to a unit");
    return NormalFormIdeal{win.value.first, win.value.second};
}

TermIdeal term_ideal_for_path(const ChartPath& path) {
    if (path.length() == 0) throw InputError("term ideal: empty path");
    TermIdeal out;

    auto mono = [](long a, long b, long c) {
        FormalSum f;
        Term t;
        t.exps = {a, b, c};
        f.terms.push_back(t);
        return f;
    };

    // After the first blow-up the components of the map are (x, xy, z) in
    // chart A and (xy, y, z) in chart B.
    FormalSum X = path.choices[0] == 'A' ? mono(1, 0, 0) : mono(1, 1, 0);
    FormalSum Y = path.choices[0] == 'A' ? mono(1, 1, 0) : mono(0, 1, 0);

    for (std::size_t i = 1; i < path.length(); ++i) {
        // The next center sits inside the latest exceptional divisor:
        // {x = 0, y = F(z)} after chart A, {y = 0, x = G(z)} after chart B.
        // It passes through the chart origin, so the series vanishes at 0.
        const bool x_side = path.choices[i - 1] == 'A';
        SeriesSymbol sym;
        sym.name = (x_side ? "F" : "G") + std::to_string(i);
        sym.vanishes_at_origin = true;
        out.symbols.push_back(sym);
        const int sym_id = static_cast<int>(out.symbols.size()) - 1;

        FormalSum series;
        Term st;
        st.symbols = {sym_id};
        series.terms.push_back(st);

        const bool chart_a = path.choices[i] == 'A';
        FormalSum sub_x, sub_y;
        if (x_side) {
            sub_x = chart_a ? mono(1, 0, 0) : mono(1, 1, 0);
            sub_y = chart_a ? mono(1, 1, 0) : mono(0, 1, 0);
            for (const auto& t : series.terms) merge_into(sub_y, t);
        } else {
            sub_x = chart_a ? mono(1, 0, 0) : mono(1, 1, 0);
            for (const auto& t : series.terms) merge_into(sub_x, t);
            sub_y = chart_a ? mono(1, 1, 0) : mono(0, 1, 0);
        }

        auto substitute = [&](const FormalSum& f) {
            FormalSum res;
            for (const auto& t : f.terms) {
                FormalSum acc;
                Term unit;
                unit.coeff = t.coeff;
                unit.exps = {0, 0, t.exps[2]};
                unit.symbols = t.symbols;
                acc.terms.push_back(unit);
                for (long e = 0; e < t.exps[0]; ++e) acc = multiply(acc, sub_x);
                for (long e = 0; e < t.exps[1]; ++e) acc = multiply(acc, sub_y);
                for (const auto& u : acc.terms) merge_into(res, u);
            }
            return res;
        };
        X = substitute(X);
        Y = substitute(Y);
    }

    out.generators.push_back(std::move(X));
    out.generators.push_back(std::move(Y));
    out.generators.push_back(mono(0, 0, 1));
    return out;
}

} // namespace lctforge
