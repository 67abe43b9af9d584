#include "lctforge/rational.hpp"

#include <cctype>
#include <ostream>

#include "lctforge/errors.hpp"

namespace lctforge {

Rational::Rational(long long n) {
    // mpz has no long long constructor on LP64 it does, but stay portable.
    mpz_class z;
    bool neg = n < 0;
    unsigned long long m = neg ? 0ull - static_cast<unsigned long long>(n)
                               : static_cast<unsigned long long>(n);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
    if (neg) z = -z;
    v_ = mpq_class(z);
}

Rational::Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty rational literal");
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    // GMP's string constructor rejects an explicit '+'.
    auto drop_plus = [](std::string t) { return t[0] == '+' ? t.substr(1) : t; };
    std::size_t slash = s.find('/');
    mpq_class v;
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InputError("bad rational literal '" + text + "'");
        v = mpq_class(mpz_class(drop_plus(s)));
    } else {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!valid_int(p) || !valid_int(q))
            throw InputError("bad rational literal '" + text + "'");
        mpz_class den(drop_plus(q));
        if (den == 0) throw InputError("zero denominator in '" + text + "'");
        v = mpq_class(mpz_class(drop_plus(p))) / mpq_class(den);
    }
    v.canonicalize();
    return Rational(v);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    bool invert = e < 0;
    unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), k);
    Rational r{mpq_class(num, den)};
    return invert ? r.reciprocal() : r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw InputError("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(mpq_class(c));
}

} // namespace lctforge
