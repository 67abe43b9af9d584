#include "lctforge/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "lctforge/errors.hpp"

namespace lctforge {
namespace {

bool dominates(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

bool is_zero_vec(const Exponents& a) {
    return std::all_of(a.begin(), a.end(), [](long e) { return e == 0; });
}

} // namespace

MonomialIdeal::MonomialIdeal(int dim, std::vector<Exponents> generators) : dim_(dim) {
    if (dim <= 0) throw InputError("monomial ideal: dimension must be positive");
    if (generators.empty()) throw InputError("monomial ideal: no generators");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != dim)
            throw InputError("monomial ideal: generator arity != dim");
        for (long e : g)
            if (e < 0) throw InputError("monomial ideal: negative exponent");
    }
    // The zero vector absorbs everything: unit ideal.
    for (const auto& g : generators) {
        if (is_zero_vec(g)) {
            unit_ = true;
            gens_ = {Exponents(dim, 0)};
            return;
        }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            if (i != j && dominates(generators[i], generators[j])) redundant = true;
        if (!redundant) gens_.push_back(generators[i]);
    }
}

MonomialIdeal MonomialIdeal::parse(const std::string& literal, int dim) {
    std::vector<Exponents> gens;
    std::stringstream ss(literal);
    std::string part;
    while (std::getline(ss, part, ',')) {
        std::string s;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.empty()) throw InputError("empty monomial in '" + literal + "'");
        Exponents e(dim, 0);
        std::size_t pos = 0;
        if (s == "1") {
            gens.push_back(e);
            continue;
        }
        while (pos < s.size()) {
            if (s[pos] != 'x') throw InputError("expected variable at '" + s.substr(pos) + "'");
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw InputError("missing variable index in '" + s + "'");
            std::string num = s.substr(start, pos - start);
            if (num.size() > 6) throw InputError("variable index too large in '" + s + "'");
            int idx = std::stoi(num);
            if (idx < 1 || idx > dim)
                throw InputError("variable x" + std::to_string(idx) + " out of range");
            long power = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (start == pos) throw InputError("missing exponent in '" + s + "'");
                num = s.substr(start, pos - start);
                if (num.size() > 9) throw InputError("exponent too large in '" + s + "'");
                power = std::stol(num);
            }
            e[idx - 1] += power;
            if (pos < s.size()) {
                if (s[pos] != '*') throw InputError("expected '*' in '" + s + "'");
                ++pos;
                if (pos == s.size()) throw InputError("trailing '*' in '" + s + "'");
            }
        }
        gens.push_back(e);
    }
    return MonomialIdeal(dim, gens);
}

std::string MonomialIdeal::str() const {
    std::string out = "(";
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        if (g) out += ", ";
        bool first = true;
        bool all_zero = true;
        for (int i = 0; i < dim_; ++i) {
            long e = gens_[g][i];
            if (e == 0) continue;
            all_zero = false;
            if (!first) out += "*";
            out += "x" + std::to_string(i + 1);
            if (e > 1) out += "^" + std::to_string(e);
            first = false;
        }
        if (all_zero) out += "1";
    }
    return out + ")";
}

MonomialIdeal direct_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    int n = I.dim(), m = J.dim();
    std::vector<Exponents> gens;
    for (const auto& g : I.generators()) {
        Exponents e(g);
        e.resize(n + m, 0);
        gens.push_back(e);
    }
    for (const auto& g : J.generators()) {
        Exponents e(n + m, 0);
        std::copy(g.begin(), g.end(), e.begin() + n);
        gens.push_back(e);
    }
    return MonomialIdeal(n + m, gens);
}

} // namespace lctforge
