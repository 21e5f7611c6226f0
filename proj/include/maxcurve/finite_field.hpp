#ifndef MAXCURVE_FINITE_FIELD_HPP
#define MAXCURVE_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "maxcurve/errors.hpp"

// Explicit arithmetic in F_{q^2}, q = p^k, built as F_p[t]/(f) with f the
// lexicographically least monic irreducible of degree 2k (coefficients
// compared from the constant term up). Construction is deterministic, so
// two fields with equal (p, k) are interchangeable.

namespace maxcurve {

class Field;

class FieldElement {
public:
    FieldElement() = default;

    const std::vector<std::uint16_t>& coeffs() const { return c_; }
    bool is_zero() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    FieldElement inv() const;                 // throws DivisionByZero on 0
    FieldElement pow(std::int64_t e) const;   // e < 0 requires a unit; 0^0 = 1

    // Index in enumeration order: sum c_i p^i.
    std::uint64_t index() const;

    // Polynomial in t, highest degree first, e.g. "12t+12", "t^3+1", "0".
    std::string str() const;

    Field field() const;

private:
    friend class Field;
    FieldElement(std::shared_ptr<const void> data, std::vector<std::uint16_t> c)
        : data_(std::move(data)), c_(std::move(c)) {}

    std::shared_ptr<const void> data_; // keeps the Field's internals alive
    std::vector<std::uint16_t> c_;     // reduced, length ext_degree, c_[i] < p
};

class Field {
public:
    static constexpr std::uint64_t kDefaultSizeBudget = 1ull << 20;

    // Throws NotPrime, BadParameters (k = 0), BudgetExceeded (p^2k > budget).
    static Field create(std::uint64_t p, unsigned k,
                        std::uint64_t size_budget = kDefaultSizeBudget);

    std::uint64_t p() const;
    unsigned k() const;
    unsigned ext_degree() const;   // 2k
    std::uint64_t q() const;       // p^k
    std::uint64_t size() const;    // q^2

    // Monic modulus, length ext_degree + 1, constant term first.
    const std::vector<std::uint16_t>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;                       // the class of t
    FieldElement from_int(std::uint64_t v) const;   // v mod p, embedded constant
    FieldElement from_coeffs(const std::vector<std::uint16_t>& c) const;
    FieldElement element(std::uint64_t index) const;

    // All q^2 elements, element(i) at position i.
    std::vector<FieldElement> elements() const;

    bool same_field(const Field& rhs) const;

    struct Data; // opaque

private:
    explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;

    friend class FieldElement;
};

} // namespace maxcurve

#endif
