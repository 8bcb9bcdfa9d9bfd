#include "doctest.h"

#include <numeric>
#include <vector>

#include "zcenter/cyclotomic.hpp"
#include "zcenter/errors.hpp"

using namespace zcenter;

namespace {

CycNum z(long n, long k = 1) { return CycNum::zeta_power(n, k); }

// Deterministic sample values in Q(zeta_n) exercising denominators and
// every basis position.
std::vector<CycNum> samples(long n) {
    std::vector<CycNum> v;
    v.push_back(CycNum::integer(0));
    v.push_back(CycNum::integer(1));
    v.push_back(CycNum::integer(-2));
    v.push_back(CycNum::rational(3, 7));
    long d = euler_phi(n);
    for (long k = 0; k < d; ++k) {
        std::vector<Int> c(d, 0);
        c[k] = 1 + k;
        if (k > 0) c[k - 1] = -1;
        v.push_back(CycNum::from_coeffs(n, c, 2 + k));
    }
    v.push_back(z(n) + CycNum::rational(1, 2));
    return v;
}

}  // namespace

TEST_CASE("ring axioms hold at every conductor up to 24") {
    for (long n = 1; n <= 24; ++n) {
        auto vals = samples(n);
        for (size_t a = 0; a < vals.size(); ++a)
            for (size_t b = 0; b < vals.size(); ++b) {
                CHECK(vals[a] + vals[b] == vals[b] + vals[a]);
                CHECK(vals[a] * vals[b] == vals[b] * vals[a]);
                size_t c = (a + b) % vals.size();
                CHECK((vals[a] + vals[b]) + vals[c] == vals[a] + (vals[b] + vals[c]));
                CHECK((vals[a] * vals[b]) * vals[c] == vals[a] * (vals[b] * vals[c]));
                CHECK(vals[a] * (vals[b] + vals[c]) ==
                      vals[a] * vals[b] + vals[a] * vals[c]);
            }
        for (const auto& x : vals) {
            CHECK(x + CycNum::integer(0) == x);
            CHECK(x * CycNum::integer(1) == x);
            CHECK((x - x).is_zero());
        }
    }
}

TEST_CASE("primitive roots satisfy their defining relations") {
    for (long n = 1; n <= 24; ++n) {
        CHECK(z(n).pow((unsigned long)n).is_one());
        for (long k = 1; k < n; ++k) CHECK_FALSE(z(n).pow((unsigned long)k).is_one());
    }
    // Vanishing sums: 1 + zeta_p + ... + zeta_p^{p-1} = 0 for prime p.
    for (long p : {2, 3, 5, 7, 11, 13}) {
        CycNum s = CycNum::integer(0);
        for (long k = 0; k < p; ++k) s += z(p, k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("cross-conductor identities") {
    CHECK(z(2) == CycNum::integer(-1));
    CHECK(z(6) * z(6) == z(3));
    CHECK(z(6) == -z(3, 2));             // zeta_6 = -zeta_3^2
    CHECK(z(12, 3) == z(4));             // zeta_12^3 = i
    CHECK(z(3) + z(4) == z(4) + z(3));   // mixed conductors embed at 12
    CHECK((z(3) + z(4)).conductor() == 12);
    CHECK(z(8) * z(8) == z(4));
    // (zeta_8 + zeta_8^7)^2 = 2, the real quadratic subfield of Q(zeta_8).
    CycNum rt2 = z(8) + z(8, 7);
    CHECK(rt2 * rt2 == CycNum::integer(2));
    CHECK(z(5) + z(5, 2) + z(5, 3) + z(5, 4) == CycNum::integer(-1));
}

TEST_CASE("embedded is a ring map and compatible with equality") {
    CycNum a = z(3) + CycNum::rational(1, 3);
    CycNum b = z(3, 2).scaled(2, 5);
    CHECK(a.embedded(12) + b.embedded(12) == (a + b).embedded(12));
    CHECK(a.embedded(12) * b.embedded(12) == (a * b).embedded(12));
    CHECK(a.embedded(12).embedded(24) == a.embedded(24));
    CHECK(a.embedded(12) == a.embedded(24).embedded(24));
}

TEST_CASE("conjugation and Galois automorphisms") {
    for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L, 15L, 16L, 24L}) {
        auto vals = samples(n);
        for (const auto& x : vals) {
            CHECK(x.conj().conj() == x);
            for (long t = 1; t < n; ++t) {
                if (std::gcd(t, n) != 1) continue;
                CHECK(x.galois(t).conj() == x.conj().galois(t));
                for (long s = 1; s < n; ++s) {
                    if (std::gcd(s, n) != 1) continue;
                    CHECK(x.galois(t).galois(s) == x.galois((s * t) % n));
                }
            }
        }
        // Conjugation is the n-1 automorphism.
        if (n > 2) CHECK(z(n).conj() == z(n, n - 1));
    }
    CHECK(CycNum::rational(5, 3).conj() == CycNum::rational(5, 3));
    CHECK_THROWS_AS(z(6).galois(2), not_coprime);
    CHECK_THROWS_AS(z(6).galois(3), not_coprime);
}

TEST_CASE("rational detection") {
    CHECK(CycNum::integer(7).as_integer().value() == 7);
    CHECK_FALSE(CycNum::rational(1, 2).as_integer().has_value());
    auto r = CycNum::rational(-6, 4).as_rational().value();
    CHECK(r.first == -3);
    CHECK(r.second == 2);
    CHECK_FALSE(z(3).as_rational().has_value());
    // zeta_5 + ... + zeta_5^4 collapses to the integer -1.
    CycNum s = z(5) + z(5, 2) + z(5, 3) + z(5, 4);
    CHECK(s.as_integer().value() == -1);
}

TEST_CASE("absolute value squared") {
    CHECK(CycNum::integer(-3).abs_squared() == CycNum::integer(9));
    CHECK(z(4).abs_squared().is_one());
    CHECK((CycNum::integer(1) + z(4)).abs_squared() == CycNum::integer(2));
    // |1 + zeta_3|^2 = 1: 1 + zeta_3 = -zeta_3^2 is a root of unity.
    CHECK((CycNum::integer(1) + z(3)).abs_squared().is_one());
    // Golden-ratio norm: |zeta_5 + zeta_5^4|^2 is not 1 and not an integer.
    CycNum g = z(5) + z(5, 4);
    CHECK_FALSE(g.abs_squared().is_one());
    CHECK_FALSE(g.abs_squared().as_integer().has_value());
}

TEST_CASE("root of unity detection is exact") {
    CHECK(CycNum::integer(1).root_of_unity_order().value() == 1);
    CHECK(CycNum::integer(-1).root_of_unity_order().value() == 2);
    CHECK_FALSE(CycNum::integer(2).root_of_unity_order().has_value());
    CHECK(z(12, 5).root_of_unity_order().value() == 12);
    CHECK(z(12, 8).root_of_unity_order().value() == 3);
    CHECK((-z(3)).root_of_unity_order().value() == 6);
    CHECK((CycNum::integer(1) + z(3)).root_of_unity_order().value() == 6);
    CHECK_FALSE((CycNum::integer(1) + z(4)).root_of_unity_order().has_value());
    CHECK_FALSE(CycNum::rational(1, 2).root_of_unity_order().has_value());
    CHECK_FALSE((z(5) + z(5, 4)).root_of_unity_order().has_value());
}

TEST_CASE("text round-trip is lossless") {
    for (long n : {1L, 2L, 3L, 8L, 12L, 20L}) {
        for (const auto& x : samples(n)) {
            CHECK(CycNum::parse(x.str()) == x);
        }
    }
}

TEST_CASE("cmp is a total order consistent with equality") {
    auto vals = samples(12);
    for (const auto& a : vals)
        for (const auto& b : vals) {
            int c = CycNum::cmp(a, b);
            CHECK(c == -CycNum::cmp(b, a));
            CHECK((c == 0) == (a == b));
        }
    for (const auto& a : vals)
        for (const auto& b : vals)
            for (const auto& c : vals)
                if (CycNum::cmp(a, b) < 0 && CycNum::cmp(b, c) < 0)
                    CHECK(CycNum::cmp(a, c) < 0);
}

TEST_CASE("scaled applies an exact rational factor") {
    CycNum x = z(8) + CycNum::integer(3);
    CHECK(x.scaled(2, 6) == x.scaled(1, 3));
    CHECK(x.scaled(0, 5).is_zero());
    CHECK(x.scaled(-4, 2) == x * CycNum::integer(-2));
}
