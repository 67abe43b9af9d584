#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "lctforge/errors.hpp"
#include "lctforge/intersection.hpp"

using namespace lctforge;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

// Blow-up of the plane: H^2 = 1, E^2 = -1, H.E = 0.
IntersectionForm plane_blowup_form() {
    IntersectionForm f(2, 2);
    f.set({0, 0}, Q(1));
    f.set({0, 1}, Q(0));
    f.set({1, 1}, Q(-1));
    return f;
}

DivisorClass cls(std::initializer_list<long> xs) {
    DivisorClass c;
    for (long x : xs) c.coeffs.emplace_back(x);
    return c;
}

} // namespace

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(ClassBasis({"H", "H"}, 2), InputError);
    CHECK_THROWS_AS(ClassBasis({}, 2), InputError);
    CHECK_THROWS_AS(ClassBasis({"H"}, 0), InputError);
    ClassBasis b({"H", "E"}, 2);
    CHECK(b.index_of("E") == 1);
    CHECK(b.index_of("X") == -1);
}

TEST_CASE("intersect worked examples") {
    IntersectionForm f = plane_blowup_form();
    DivisorClass H = cls({1, 0}), E = cls({0, 1});
    CHECK(intersect(f, {H, H}) == Q(1));
    CHECK(intersect(f, {H, E}) == Q(0));
    CHECK(intersect(f, {E, E}) == Q(-1));
    CHECK(intersect(f, {H + E, H - E}) == Q(2));
    CHECK(intersect(f, {cls({0, 0}), H}) == Q(0));
    CHECK_THROWS_AS(intersect(f, {H}), InputError);
}

TEST_CASE("permutation invariance and multilinearity") {
    std::mt19937_64 rng(606);
    std::uniform_int_distribution<long> v(-5, 5);
    // Random symmetric arity-3 form on a 3-class basis.
    IntersectionForm f(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = j; k < 3; ++k) f.set({i, j, k}, Q(v(rng)));

    for (int iter = 0; iter < 100; ++iter) {
        std::vector<DivisorClass> args;
        for (int t = 0; t < 3; ++t) args.push_back(cls({v(rng), v(rng), v(rng)}));
        Rational base = intersect(f, std::span<const DivisorClass>(args));
        std::vector<DivisorClass> perm = args;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(intersect(f, std::span<const DivisorClass>(perm)) == base);

        // multilinearity in the first slot
        Rational c = Q(v(rng), 3);
        DivisorClass extra = cls({v(rng), v(rng), v(rng)});
        std::vector<DivisorClass> lhs = args;
        lhs[0] = c * args[0] + extra;
        std::vector<DivisorClass> rhs_extra = args;
        rhs_extra[0] = extra;
        CHECK(intersect(f, std::span<const DivisorClass>(lhs)) ==
              c * base + intersect(f, std::span<const DivisorClass>(rhs_extra)));
    }
}

TEST_CASE("power_pair examples") {
    IntersectionForm f = plane_blowup_form();
    DivisorClass H = cls({1, 0}), E = cls({0, 1});

    // m = 1 is plain linearity: (L + a u).rest
    std::vector<DivisorClass> rest = {E};
    CHECK(power_pair(f, H, H, Q(2), 1, rest) == Q(0));  // 3(H.E) = 0
    rest = {H};
    CHECK(power_pair(f, H, H, Q(2), 1, rest) == Q(3));  // 3(H.H) = 3
    CHECK(power_pair(f, H, E, Q(0), 1, rest) == Q(1));  // a = 0 degenerates

    // a = 0 with m = 2: plain square
    CHECK(power_pair(f, H + E, E, Q(0), 2, {}) == Q(0));  // (H+E)^2 = 1 - 1

    CHECK_THROWS_AS(power_pair(f, H, E, Q(1), 3, {}), InputError);
    rest = {H, E};
    CHECK_THROWS_AS(power_pair(f, H, E, Q(1), 1, rest), InputError);
}

TEST_CASE("power_pair agrees with direct expansion") {
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<long> v(-4, 4);
    for (int n = 1; n <= 4; ++n) {
        IntersectionForm f(n, 2);
        // random symmetric arity-n form on 2 classes
        std::vector<int> idx(n, 0);
        for (;;) {
            if (std::is_sorted(idx.begin(), idx.end())) f.set(idx, Q(v(rng)));
            int pos = n - 1;
            while (pos >= 0 && ++idx[pos] == 2) idx[pos--] = 0;
            if (pos < 0) break;
        }
        for (int iter = 0; iter < 40; ++iter) {
            DivisorClass A = cls({v(rng), v(rng)});
            DivisorClass B = cls({v(rng), v(rng)});
            Rational a = Q(v(rng), 2);
            for (int m = 0; m <= n; ++m) {
                std::vector<DivisorClass> rest;
                for (int t = 0; t < n - m; ++t) rest.push_back(cls({v(rng), v(rng)}));
                // direct route: (A + aB)^m . rest by multilinearity
                DivisorClass sum = A + a * B;
                std::vector<DivisorClass> args;
                for (int t = 0; t < m; ++t) args.push_back(sum);
                args.insert(args.end(), rest.begin(), rest.end());
                CHECK(power_pair(f, A, B, a, m, rest) ==
                      intersect(f, std::span<const DivisorClass>(args)));
            }
        }
    }
}
