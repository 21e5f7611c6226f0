#ifndef MAXCURVE_CRITERIA_HPP
#define MAXCURVE_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "maxcurve/errors.hpp"

// Number-theoretic maximality criteria. Everything here is divisibility
// arithmetic on q = p^k, computed exactly (q itself is a bignum; k up to
// ~64 is routine). Deliberately independent of the point-counting module:
// the two must stay separate so they can cross-check each other.

namespace maxcurve {

// q = p^k as an exact integer.
mpz_class exact_q(std::uint64_t p, std::uint64_t k);

// The Hurwitz curve with parameter n is maximal over F_{q^2} iff
// n^2-n+1 divides q+1. Requires p prime, k >= 1, n >= 2, p not dividing
// n^2-n+1 (CharacteristicDividesQ).
bool hurwitz_criterion(std::uint64_t n, std::uint64_t p, std::uint64_t k);

struct GeneralizedCriterionReport {
    bool holds;        // n^2-nl+l^2 divides q+1 (the working orientation)
    bool literal_form; // q+1 divides n^2-nl+l^2 (the other reading; kept visible)
    bool q_prime;      // whether n^2-nl+l^2 is prime, the iff hypothesis
};

// Criterion for the generalized Hurwitz curve, gcd(n, l) = 1 required
// (NotCoprime). "holds" is the maximality test; it is an iff only when
// q_prime is true.
GeneralizedCriterionReport generalized_criterion_report(std::uint64_t n, std::uint64_t l,
                                                        std::uint64_t p, std::uint64_t k);
bool generalized_criterion(std::uint64_t n, std::uint64_t l, std::uint64_t p, std::uint64_t k);

// The Fermat curve of degree m is maximal over F_{q^2} iff m divides q+1.
// Requires m >= 3 for a curve of positive genus, but any m >= 1 is accepted;
// p | m raises CharacteristicDividesM.
bool fermat_criterion(std::uint64_t m, std::uint64_t p, std::uint64_t k);

std::uint64_t euler_phi(std::uint64_t m);
// Least e >= 1 with a^e = 1 (mod m); NotCoprime when gcd(a, m) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);
// (a/p) in {-1, 0, 1}; EvenOrNonPrimeModulus unless p is an odd prime.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Units x mod m with x^w = -1 (mod m), for one exponent class w.
struct CongruenceSolution {
    std::uint64_t m = 0;
    std::uint64_t w = 0;
    std::vector<std::uint64_t> residues; // ascending
};

// One entry per w in 1..phi(m), empty classes included. Maximality of the
// Hurwitz curve over F_{p^{2k}} depends only on p mod m and k mod phi(m),
// m = n^2-n+1: it holds iff p mod m appears in the class w = k mod phi(m)
// (class phi(m) standing in for w = 0).
std::vector<CongruenceSolution> admissible_exponent_residues(std::uint64_t m);

std::string congruence_table_csv(const std::vector<CongruenceSolution>& table);
std::string congruence_table_json(const std::vector<CongruenceSolution>& table);

// For n = p^e the identity p^(3e) + 1 = (p^e + 1)(p^(2e) - p^e + 1) makes
// the Hurwitz curve maximal over F_{p^(2*3e)}; returns m = n^2-n+1 and the
// exponent class 3e mod phi(m). The identity is re-checked exactly.
struct PrimePowerExponent {
    std::uint64_t m = 0;
    std::uint64_t exponent = 0;
};
PrimePowerExponent prime_power_n_exponent(std::uint64_t p, std::uint64_t e);

// When p = 3 (mod 4), n = 0 or 1 (mod p), and m = n^2-n+1 is a prime with
// m = 3 (mod 4), quadratic reciprocity makes p a nonresidue mod m, so
// p^((m-1)/2) = -1 (mod m) and the exponent class (m-1)/2 works. When a
// hypothesis fails, `exponent` is absent and `failed_hypothesis` names it.
struct NonresidueExponent {
    std::uint64_t m = 0;
    std::optional<std::uint64_t> exponent;
    std::string failed_hypothesis;
};
NonresidueExponent nonresidue_exponent(std::uint64_t p, std::uint64_t n);

// If ord_m(p) = 2i and p^i = -1 (mod m), the exponent class i works. When
// ord is even but p^i != -1, both p^i - 1 and p^i + 1 are zero divisors
// mod m (flagged); when ord is odd no exponent class exists this way.
struct HalfOrderExponent {
    std::uint64_t order = 0;
    std::optional<std::uint64_t> exponent;
    bool zero_divisor_case = false;
};
HalfOrderExponent half_order_exponent(std::uint64_t p, std::uint64_t m);

} // namespace maxcurve

#endif
