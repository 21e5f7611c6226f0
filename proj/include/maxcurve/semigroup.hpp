#ifndef MAXCURVE_SEMIGROUP_HPP
#define MAXCURVE_SEMIGROUP_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maxcurve/errors.hpp"

// Weierstrass semigroups at the distinguished points of the Hurwitz and
// generalized Hurwitz curves, as explicit gap tables.

namespace maxcurve {

class NumericalSemigroup {
public:
    // Closure of the generators under addition; gcd of the generators must
    // be 1 (GcdNotOne). The membership table runs past the conductor, so
    // contains() is total.
    static NumericalSemigroup from_generators(std::vector<std::uint64_t> gens);

    // Table built from an arbitrary membership rule on 0..bound. The rule
    // must describe a numerical semigroup whose conductor is at most
    // bound - min_nonzero_member, which is re-checked (GcdNotOne otherwise).
    static NumericalSemigroup from_membership(const std::vector<bool>& member,
                                              std::vector<std::uint64_t> gens = {});

    bool contains(std::uint64_t x) const;
    const std::vector<std::uint64_t>& gaps() const { return gaps_; }
    std::uint64_t genus() const { return gaps_.size(); }
    // Largest gap; -1 when there are no gaps.
    std::int64_t frobenius_number() const;
    std::uint64_t conductor() const;
    const std::vector<std::uint64_t>& generators() const { return gens_; }
    std::uint64_t bound() const { return member_.size() - 1; }

private:
    NumericalSemigroup() = default;
    std::vector<bool> member_; // indices 0..bound
    std::vector<std::uint64_t> gaps_;
    std::vector<std::uint64_t> gens_; // sorted, deduplicated; may be empty for rule-built tables
};

// Generators s(n-1)+1, s = 1..n, of the Weierstrass semigroup at the
// distinguished point of the Hurwitz curve with parameter n >= 2.
std::vector<std::uint64_t> hurwitz_weierstrass_generators(std::uint64_t n);
NumericalSemigroup hurwitz_weierstrass_semigroup(std::uint64_t n);

// Membership rule for the Weierstrass semigroup at the distinguished point
// of the generalized Hurwitz curve: x is a member iff x = (n-l)s + nt for
// integers t >= 0, s with -lt <= ns and ls <= (n-l)t. Requires n > l >= 1
// and gcd(n, l) = 1.
bool generalized_weierstrass_member(std::uint64_t n, std::uint64_t l, std::uint64_t x);
// Table up to 2(n^2-nl+l^2).
NumericalSemigroup generalized_weierstrass_semigroup(std::uint64_t n, std::uint64_t l);

// Coefficients of the principal divisor of x^s y^t on the generalized
// Hurwitz curve at the three distinguished points, in the order
// (other branch point, third point, pole): (ns+lt, -ls+(n-l)t, -((n-l)s+nt)).
// They sum to zero.
std::array<std::int64_t, 3> monomial_divisor_coefficients(std::uint64_t n, std::uint64_t l,
                                                          std::int64_t s, std::int64_t t);

// Smallest divisor of m that is a nongap of sg; BadParameters when none is.
std::uint64_t smallest_member_divisor(std::uint64_t m, const NumericalSemigroup& sg);

std::string semigroup_json(const NumericalSemigroup& sg);

} // namespace maxcurve

#endif
