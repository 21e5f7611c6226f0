#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "maxcurve/bounds.hpp"
#include "maxcurve/errors.hpp"
#include "maxcurve/numeric.hpp"

using namespace maxcurve;

namespace {

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; q <= limit; ++q)
        if (prime_power_decompose(q)) out.push_back(q);
    return out;
}

// 256-bit float value of a + b sqrt(r); used only as a test oracle.
mpf_class surd_value(const QuadraticSurd& s) {
    const mpf_class a(s.a, 256), b(s.b, 256), r(s.r, 256);
    return a + b * sqrt(r);
}

} // namespace

TEST_CASE("surd sign and equality pins") {
    auto surd = [](long a, long b, long r) {
        return make_surd(Rational(a), Rational(b), Rational(r));
    };
    CHECK(surd_sign(surd(0, -1, 2)) == -1);
    CHECK(surd_sign(surd(2, -1, 2)) == 1);  // 2 > sqrt(2)
    CHECK(surd_sign(surd(1, -1, 2)) == -1); // 1 < sqrt(2)
    CHECK(surd_sign(surd(-3, 2, 2)) == -1); // 2 sqrt(2) < 3
    CHECK(surd_sign(surd(-2, 3, 2)) == 1);
    CHECK(surd_sign(surd(0, 5, 0)) == 0);   // sqrt(0)
    CHECK(surd_sign(surd(0, 0, 7)) == 0);

    CHECK(compare(surd(0, 1, 4), Rational(2)) == 0);  // sqrt(4) = 2
    CHECK(compare(surd(0, 2, 2), surd(0, 1, 8)) == 0); // 2 sqrt(2) = sqrt(8)
    CHECK(compare(surd(1, 1, 2), surd(1, 1, 2)) == 0);
    CHECK(compare(surd(0, 1, 2), surd(0, 1, 3)) == -1);
    CHECK(compare(surd(5, -1, 2), surd(0, 1, 8)) == 1); // 5 - sqrt(2) > 2 sqrt(2)

    CHECK_THROWS_AS(make_surd(Rational(1), Rational(1), Rational(-1)), NegativeDiscriminant);
}

TEST_CASE("surd comparison against a 256-bit float oracle") {
    std::mt19937_64 rng(42);
    auto random_rational = [&](long span) {
        const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
        const long den = 1 + static_cast<long>(rng() % 40);
        Rational r(num, den);
        r.canonicalize();
        return r;
    };
    for (int trial = 0; trial < 4000; ++trial) {
        const QuadraticSurd s1{random_rational(50), random_rational(20),
                               Rational(static_cast<long>(rng() % 900))};
        const QuadraticSurd s2{random_rational(50), random_rational(20),
                               Rational(static_cast<long>(rng() % 900))};
        const mpf_class diff = surd_value(s1) - surd_value(s2);
        // Only trust the oracle away from zero; exact ties are pinned above.
        if (abs(diff) < 1e-20) continue;
        const int expect = diff > 0 ? 1 : -1;
        CHECK(compare(s1, s2) == expect);
        CHECK(compare(s2, s1) == -expect);
    }
}

TEST_CASE("d1 pins and comparison with d2") {
    CHECK(compare(d1(3), Rational(3)) == 0); // radicand collapses to 9
    CHECK(d1(3).str() == "(3/2;1/2;9)");
    CHECK_THROWS_AS(d1(1), BadParameters);
    // d1 dominates d2 on the whole desk range.
    for (std::uint64_t q = 3; q <= 1024; ++q)
        CHECK(compare(d1(q), Rational(static_cast<long>(d2(q)))) >= 0);
}

TEST_CASE("F ratio pins") {
    CHECK(F_ratio(3) == Rational(16, 5));
    CHECK(F_ratio(4) == Rational(25, 7));
    CHECK(F_ratio(5) == Rational(4));
    CHECK_THROWS_AS(F_ratio(1), BadParameters);
    // strictly below (q + 3)/2 from q = 6 on
    for (std::uint64_t q = 6; q <= 1024; ++q)
        CHECK(F_ratio(q) < Rational(static_cast<long>(q) + 3) / 2);
}

TEST_CASE("d2 pins") {
    CHECK_THROWS_AS(d2(2), NotApplicable);
    CHECK(d2(3) == 3);
    CHECK(d2(4) == 3);
    CHECK(d2(5) == 4);
    CHECK(d2(7) == 4);
    CHECK(d2(8) == 5);
    CHECK(d2(9) == 5);
    CHECK(d2(11) == 6);
    CHECK(d2(13) == 7);
}

TEST_CASE("genus exclusion intervals") {
    CHECK(genus_exclusion_interval(8) == std::pair<std::uint64_t, std::uint64_t>{6, 12});
    CHECK(genus_exclusion_interval(9) == std::pair<std::uint64_t, std::uint64_t>{6, 16});
    CHECK(genus_exclusion_interval(4) == std::pair<std::uint64_t, std::uint64_t>{1, 2});
    CHECK(genus_exclusion_interval(5) == std::pair<std::uint64_t, std::uint64_t>{1, 4});
    CHECK(genus_exclusion_interval(2) == std::pair<std::uint64_t, std::uint64_t>{0, 0});
}

TEST_CASE("delta_M pins and sign pattern") {
    CHECK(delta_M(4, 32) == -233199);
    CHECK(delta_M(4, 64) == 6410769);
    CHECK(delta_M(3, 9) == -5279);
    CHECK(delta_M(3, 27) == 190201);
    CHECK(delta_M(4, 2) == -279);
    CHECK_THROWS_AS(delta_M(0, 5), BadParameters);
    CHECK_THROWS_AS(delta_M(3, 1), BadParameters);

    // Over powers q >= M of the matching characteristic (2 for M = 4),
    // delta_M(q) < 0 exactly at q in {4,8,16,32} for M = 4 and q in
    // {M, M^2} for M = 3, 5.
    for (std::uint64_t M : {3, 4, 5}) {
        const std::uint64_t base = (M == 4) ? 2 : M;
        std::set<std::uint64_t> negative_at;
        for (std::uint64_t q = base; q <= (1u << 14); q *= base) {
            if (q < M) continue;
            if (delta_M(M, q) < 0) negative_at.insert(q);
        }
        if (M == 4)
            CHECK(negative_at == std::set<std::uint64_t>{4, 8, 16, 32});
        else
            CHECK(negative_at == std::set<std::uint64_t>{M, M * M});
    }
}

TEST_CASE("F_lower and F_upper roots") {
    CHECK_THROWS_AS(F_lower(4, 32), NegativeDiscriminant);
    CHECK_THROWS_AS(F_upper(3, 9), NegativeDiscriminant);

    for (std::uint64_t q : {64, 128, 256}) {
        CHECK(compare(F_lower(4, q), Rational(4)) > 0);
        CHECK(compare(F_upper(4, q), Rational(static_cast<long>(q / 4 - 1))) < 0);
    }
    CHECK(compare(F_lower(4, 512), Rational(4)) > 0);
    CHECK(compare(F_upper(4, 512), Rational(128)) < 0);
    CHECK(compare(F_upper(3, 27), Rational(10)) < 0);
    // lower root really is below the upper one
    for (std::uint64_t q : {64, 128, 256, 512})
        CHECK(compare(F_lower(4, q), F_upper(4, q)) < 0);
}

TEST_CASE("d3 pins") {
    CHECK(d3(2, 64) == 15);
    CHECK(d3(2, 128) == 31);
    CHECK(d3(2, 256) == 63);
    CHECK(d3(2, 512) == 128);
    CHECK(d3(2, 1024) == 256);
    CHECK(d3(3, 27) == 8);
    CHECK(d3(3, 81) == 26);
    CHECK(d3(5, 125) == 22);
    CHECK_THROWS_AS(d3(2, 32), NotApplicable);
    CHECK_THROWS_AS(d3(3, 9), NotApplicable);
    CHECK_THROWS_AS(d3(5, 5), NotApplicable);
    CHECK_THROWS_AS(d3(3, 8), BadParameters);
    CHECK_THROWS_AS(d3(2, 6), BadParameters);
}

TEST_CASE("d4 and its prime-power refinement") {
    const QuadraticSurd v13 = d4(13);
    CHECK(v13.str() == "(513/110;1/110;47569)");
    CHECK(compare(v13, Rational(6)) > 0);
    CHECK(compare(v13, Rational(7)) < 0);
    CHECK(d4(8).r == 3384);
    CHECK_THROWS_AS(d4(9), NotApplicable);
    CHECK_THROWS_AS(d4(10), NotApplicable);

    // At q = 8 the two forms coincide exactly.
    CHECK(compare(d4_prime_power(2, 8), d4(8)) == 0);
    CHECK_THROWS_AS(d4_prime_power(13, 13), NotApplicable); // v = 1
    CHECK_THROWS_AS(d4_prime_power(3, 9), NotApplicable);   // q < 11, q != 8

    const QuadraticSurd w = d4_prime_power(3, 27);
    CHECK(compare(w, Rational(12)) > 0);
    CHECK(compare(w, Rational(13)) < 0);
    CHECK(compare(d4_prime_power(2, 128), d4(128)) > 0);

    // The refinement never loses to the plain form where both apply.
    for (std::uint64_t q : prime_powers_upto(1 << 14)) {
        const auto pv = prime_power_decompose(q);
        if (pv->second < 2 || (q != 8 && q < 11)) continue;
        CHECK(compare(d4_prime_power(pv->first, q), d4(q)) >= 0);
    }

    // d4 sits above d3 wherever both are defined.
    for (std::uint64_t q : prime_powers_upto(1 << 14)) {
        const auto pv = prime_power_decompose(q);
        std::uint64_t v3;
        try {
            v3 = d3(pv->first, q);
        } catch (const NotApplicable&) {
            continue;
        }
        CHECK(compare(d4(q), Rational(static_cast<long>(v3))) > 0);
    }
}

TEST_CASE("d5 dispatches on the exponent") {
    CHECK(compare(d5(13, 13), d4(13)) == 0);
    CHECK(compare(d5(2, 16), d4_prime_power(2, 16)) == 0);
    CHECK(compare(d5(2, 8), d4(8)) == 0);
    CHECK_THROWS_AS(d5(3, 9), NotApplicable);
    CHECK_THROWS_AS(d5(2, 4), NotApplicable);
}

TEST_CASE("G bound: negative radicand until about q = 70") {
    CHECK_THROWS_AS(G_bound(2), NotApplicable);
    CHECK_THROWS_AS(G_bound(3), NegativeDiscriminant);
    CHECK_THROWS_AS(G_bound(13), NegativeDiscriminant);
    CHECK_THROWS_AS(G_bound(64), NegativeDiscriminant);
    CHECK_THROWS_AS(G_bound(67), NegativeDiscriminant);
    CHECK(compare(G_bound(71), Rational(0)) > 0);
    const QuadraticSurd g128 = G_bound(128);
    CHECK(compare(g128, Rational(23)) > 0);
    CHECK(compare(g128, Rational(24)) < 0);

    // Where defined, G stays below d5.
    for (std::uint64_t q : prime_powers_upto(1 << 14)) {
        if (q < 71) continue;
        const auto pv = prime_power_decompose(q);
        CHECK(compare(G_bound(q), d5(pv->first, q)) < 0);
    }
}

TEST_CASE("admissible degree sets") {
    using V = std::vector<std::uint64_t>;
    CHECK(admissible_degrees(2, 2) == V{3});
    CHECK(admissible_degrees(3, 3) == V{3, 4});
    CHECK(admissible_degrees(2, 4) == V{3, 5});
    CHECK(admissible_degrees(5, 5) == V{3, 4, 6});
    CHECK(admissible_degrees(7, 7) == V{3, 4, 8});
    CHECK(admissible_degrees(2, 8) == V{3, 4, 5, 9});
    CHECK(admissible_degrees(3, 9) == V{3, 4, 5, 10});
    CHECK(admissible_degrees(11, 11) == V{3, 4, 5, 6, 12});
    CHECK(admissible_degrees(13, 13) == V{3, 4, 5, 6, 7, 14});
    CHECK_THROWS_AS(admissible_degrees(2, 12), BadParameters);
    CHECK_THROWS_AS(admissible_degrees(3, 4), BadParameters);
}
