#include "maxcurve/bounds.hpp"

#include <cmath>

#include "maxcurve/numeric.hpp"

namespace maxcurve {

namespace {

Rational rat(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v))); }

// (p, v) with q = p^v; verifies the caller's p matches.
std::pair<std::uint64_t, unsigned> decompose_checked(std::uint64_t p, std::uint64_t q) {
    const auto pv = prime_power_decompose(q);
    if (!pv) throw BadParameters("q must be a prime power");
    if (pv->first != p) throw BadParameters("q is not a power of p");
    return *pv;
}

} // namespace

int sign_of(const Rational& x) { return sgn(x); }

double QuadraticSurd::approx() const {
    return a.get_d() + b.get_d() * std::sqrt(r.get_d());
}

std::string QuadraticSurd::str() const {
    return "(" + a.get_str() + ";" + b.get_str() + ";" + r.get_str() + ")";
}

QuadraticSurd make_surd(Rational a, Rational b, Rational r) {
    if (sgn(r) < 0) throw NegativeDiscriminant("negative radicand");
    return QuadraticSurd{std::move(a), std::move(b), std::move(r)};
}

int surd_sign(const QuadraticSurd& s) {
    const int sa = sgn(s.a);
    const int sb = (sgn(s.r) == 0) ? 0 : sgn(s.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: |a| vs |b|sqrt(r) decided by squaring
    const Rational t = s.a * s.a - s.b * s.b * s.r;
    return sa > 0 ? sgn(t) : -sgn(t);
}

int compare(const QuadraticSurd& s, const Rational& x) {
    return surd_sign(QuadraticSurd{s.a - x, s.b, s.r});
}

int compare(const QuadraticSurd& s1, const QuadraticSurd& s2) {
    // s2 rational (b = 0, or r = 0 so b*sqrt(r) drops regardless of b).
    if (sgn(s2.b) == 0 || sgn(s2.r) == 0)
        return surd_sign(QuadraticSurd{s1.a - s2.a, s1.b, s1.r});
    if (s1.r == s2.r)
        return surd_sign(QuadraticSurd{s1.a - s2.a, s1.b - s2.b, s1.r});
    if (sgn(s1.b) == 0 || sgn(s1.r) == 0)
        return -surd_sign(QuadraticSurd{s2.a - s1.a, s2.b, s2.r});
    // sign of X - Y with X = (a1-a2) + b1 sqrt(r1), Y = b2 sqrt(r2)
    const Rational A = s1.a - s2.a;
    const int sX = surd_sign(QuadraticSurd{A, s1.b, s1.r});
    const int sY = sgn(s2.b);
    if (sX != sY) return sX > sY ? 1 : -1;
    if (sX == 0) return 0;
    // both strictly one-signed: compare X^2 against Y^2
    const int s2sq =
        surd_sign(QuadraticSurd{A * A + s1.b * s1.b * s1.r - s2.b * s2.b * s2.r,
                                Rational(2) * A * s1.b, s1.r});
    return sX > 0 ? s2sq : -s2sq;
}

QuadraticSurd d1(std::uint64_t q) {
    if (q < 2) throw BadParameters("needs q >= 2");
    const Rational qq = rat(q);
    const Rational radicand = 2 * (qq - 3) * (qq + 1) + 9;
    return make_surd(Rational(3) / 2, Rational(1) / 2, radicand);
}

Rational F_ratio(std::uint64_t q) {
    if (q < 2) throw BadParameters("needs q >= 2");
    const Rational qq = rat(q);
    return (qq + 1) * (qq + 1) / (2 * qq - 1);
}

std::uint64_t d2(std::uint64_t q) {
    if (q < 3) throw NotApplicable("d2 needs q >= 3");
    if (q == 3) return 3;
    if (q == 5) return 4;
    return (q + 2) / 2;
}

std::pair<std::uint64_t, std::uint64_t> genus_exclusion_interval(std::uint64_t q) {
    if (q < 2) throw BadParameters("needs q >= 2");
    if (q % 2 == 0) return {q * (q - 2) / 8, q * (q - 2) / 4};
    return {(q - 1) * (q - 3) / 8, (q - 1) * (q - 1) / 4};
}

mpz_class delta_M(std::uint64_t M, std::uint64_t q) {
    if (M < 1 || q < 2) throw BadParameters("needs M >= 1, q >= 2");
    const mpz_class Mz(static_cast<unsigned long>(M)), qz(static_cast<unsigned long>(q));
    return qz * qz * qz * qz - (4 * Mz * Mz - 6 * Mz) * qz * qz * qz +
           (Mz * Mz + 4 * Mz - 2) * qz * qz - (4 * Mz * Mz - 2 * Mz) * qz + 4 * Mz + 1;
}

namespace {

QuadraticSurd F_root(std::uint64_t M, std::uint64_t q, int branch) {
    if (M < 1 || q < 2 || M * q <= 1) throw BadParameters("needs M >= 1, Mq > 1");
    const mpz_class disc = delta_M(M, q);
    if (sgn(disc) < 0) throw NegativeDiscriminant("delta_M < 0");
    const Rational qq = rat(q), Mm = rat(M);
    const Rational den = 2 * (Mm * qq - 1);
    return make_surd((qq * qq + 3 * Mm * qq - 1) / den, Rational(branch) / den, Rational(disc));
}

} // namespace

QuadraticSurd F_lower(std::uint64_t M, std::uint64_t q) { return F_root(M, q, -1); }
QuadraticSurd F_upper(std::uint64_t M, std::uint64_t q) { return F_root(M, q, 1); }

std::uint64_t d3(std::uint64_t p, std::uint64_t q) {
    const unsigned v = decompose_checked(p, q).second;
    if (p == 2) {
        if (q >= 512) return q / 4;
        if (q >= 64) return q / 4 - 1;
        throw NotApplicable("d3 for p = 2 needs q >= 64");
    }
    if (v >= 3) return q / p - p + 2;
    throw NotApplicable("d3 for odd p needs q = p^v, v >= 3");
}

QuadraticSurd d4(std::uint64_t q) {
    if (q != 8 && q < 11) throw NotApplicable("d4 needs q = 8 or q >= 11");
    const Rational qq = rat(q);
    const Rational den = 10 * (qq - 2);
    const Rational radicand =
        4 * qq * qq * qq * qq - 40 * qq * qq * qq + 145 * qq * qq - 300 * qq + 600;
    return make_surd((2 * qq * qq + 15 * qq - 20) / den, Rational(1) / den, radicand);
}

QuadraticSurd d4_prime_power(std::uint64_t p, std::uint64_t q) {
    const unsigned v = decompose_checked(p, q).second;
    if (v < 2) throw NotApplicable("needs q = p^v with v >= 2");
    if (q != 8 && q < 11) throw NotApplicable("needs q = 8 or q >= 11");
    const Rational qq = rat(q), pr = rat(p);
    const Rational alpha = 5 - 1 / pr;
    const Rational den = 2 * alpha * qq - 12;
    const Rational radicand = 4 * qq * qq * qq * qq - 8 * alpha * qq * qq * qq +
                              (113 - 50 / pr + 9 / (pr * pr)) * qq * qq -
                              4 * (25 - 17 / pr) * qq + 184;
    return make_surd((2 * qq * qq + 3 * alpha * qq - 8) / den, Rational(1) / den, radicand);
}

QuadraticSurd d5(std::uint64_t p, std::uint64_t q) {
    const unsigned v = decompose_checked(p, q).second;
    if (q != 8 && q < 11) throw NotApplicable("d5 needs q = 8 or q >= 11");
    return v == 1 ? d4(q) : d4_prime_power(p, q);
}

QuadraticSurd G_bound(std::uint64_t q) {
    if (q < 3) throw NotApplicable("needs q >= 3");
    const Rational qq = rat(q);
    const Rational radicand =
        qq * qq * qq * qq - 70 * qq * qq * qq + 203 * qq * qq - 550 * qq + 1201;
    if (sgn(radicand) < 0) throw NegativeDiscriminant("radicand of G is negative");
    const Rational den = 2 * (5 * qq - 12);
    return make_surd((qq * qq + 15 * qq - 31) / den, Rational(1) / den, radicand);
}

std::vector<std::uint64_t> admissible_degrees(std::uint64_t p, std::uint64_t q) {
    decompose_checked(p, q);
    std::vector<std::uint64_t> out;
    const bool sharp = (q == 8 || q >= 11);
    const QuadraticSurd cap = sharp ? d5(p, q) : QuadraticSurd{};
    for (std::uint64_t d = 3; d <= q + 1; ++d) {
        if (d == q + 1) {
            out.push_back(d); // Hermitian degree, always allowed
            continue;
        }
        if (q < 3 || d > d2(q)) continue;
        if (sharp && compare(cap, rat(d)) < 0 && d != (q + 2) / 2) continue;
        out.push_back(d);
    }
    return out;
}

} // namespace maxcurve
