#ifndef MAXCURVE_BOUNDS_HPP
#define MAXCURVE_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "maxcurve/errors.hpp"

// Degree bounds for maximal plane curves over F_{q^2}, kept exact: a bound
// of the shape a + b*sqrt(r) is stored as a rational triple and compared by
// sign-aware squaring. No floating point enters any decision; doubles only
// appear as display hints.

namespace maxcurve {

using Rational = mpq_class;

int sign_of(const Rational& x);

struct QuadraticSurd {
    Rational a, b, r; // value a + b*sqrt(r), r >= 0
    double approx() const;
    std::string str() const; // "(a;b;r)"
};

QuadraticSurd make_surd(Rational a, Rational b, Rational r); // NegativeDiscriminant if r < 0

int surd_sign(const QuadraticSurd& s);
// Sign of s - x, resp. s1 - s2; exact for any radicands.
int compare(const QuadraticSurd& s, const Rational& x);
int compare(const QuadraticSurd& s1, const QuadraticSurd& s2);

// Degree bound for maximal curves with a singular plane model:
// (3 + sqrt(2(q-3)(q+1) + 9))/2. q >= 2.
QuadraticSurd d1(std::uint64_t q);

// (q+1)^2/(2q-1), the quotient bounding the degree via the genus bound. q >= 2.
Rational F_ratio(std::uint64_t q);

// Degree bound for nonsingular plane models of non-Hermitian maximal
// curves: floor((q+2)/2) for q >= 4 except d2(5) = 4; d2(3) = 3.
std::uint64_t d2(std::uint64_t q);

// Maximal curves have no genus in (lo, hi]; lo = q(q-2)/8, hi = q(q-2)/4
// for even q, lo = (q-1)(q-3)/8, hi = (q-1)^2/4 for odd q.
std::pair<std::uint64_t, std::uint64_t> genus_exclusion_interval(std::uint64_t q);

// Discriminant q^4 - (4M^2-6M)q^3 + (M^2+4M-2)q^2 - (4M^2-2M)q + 4M+1 of
// the quadratic whose roots are F_lower/F_upper.
mpz_class delta_M(std::uint64_t M, std::uint64_t q);

// (q^2 + 3Mq - 1 -+ sqrt(delta_M))/(2(Mq-1)); NegativeDiscriminant when
// delta_M(M, q) < 0. M >= 1, Mq > 1.
QuadraticSurd F_lower(std::uint64_t M, std::uint64_t q);
QuadraticSurd F_upper(std::uint64_t M, std::uint64_t q);

// Sharper bound from Frobenius-order M considerations: q/4 - 1 for
// q in {64, 128, 256}, q/4 for larger powers of two, q/p - p + 2 for odd p
// with q = p^v, v >= 3. NotApplicable elsewhere.
std::uint64_t d3(std::uint64_t p, std::uint64_t q);

// (2q^2 + 15q - 20 + sqrt(4q^4 - 40q^3 + 145q^2 - 300q + 600))/(10(q-2)),
// for q = 8 or q >= 11 (NotApplicable otherwise).
QuadraticSurd d4(std::uint64_t q);

// Two-parameter refinement of d4 for proper prime powers q = p^v, v >= 2.
QuadraticSurd d4_prime_power(std::uint64_t p, std::uint64_t q);

// d4(q) when q = p, d4_prime_power(p, q) when v >= 2; q = 8 or q >= 11.
QuadraticSurd d5(std::uint64_t p, std::uint64_t q);

// (q^2 + 15q - 31 + sqrt(q^4 - 70q^3 + 203q^2 - 550q + 1201))/(2(5q-12));
// the radicand is negative below q = 71 (NegativeDiscriminant).
QuadraticSurd G_bound(std::uint64_t q);

// Degrees 3..q+1 not excluded by the ladder: d = q+1 always qualifies;
// otherwise d <= d2(q), and for q = 8 or q >= 11 additionally d <= d5(p, q)
// or d = floor((q+2)/2).
std::vector<std::uint64_t> admissible_degrees(std::uint64_t p, std::uint64_t q);

} // namespace maxcurve

#endif
