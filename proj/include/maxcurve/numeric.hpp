#ifndef MAXCURVE_NUMERIC_HPP
#define MAXCURVE_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "maxcurve/errors.hpp"

// Small exact helpers on 64-bit integers shared by all modules. Anything
// that can outgrow 64 bits (q = p^k in the criteria, surd comparisons in
// the bounds) lives on GMP types instead.

namespace maxcurve {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// p^e, throwing BudgetExceeded rather than wrapping on overflow.
inline std::uint64_t checked_pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base)
            throw BudgetExceeded("integer power exceeds 64 bits");
        r *= base;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// q = p^v with p prime, v >= 1; nullopt when q is not a prime power.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power_decompose(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = q;
    if (!is_prime_u64(q)) {
        for (std::uint64_t f = 2; f * f <= q; ++f) {
            if (q % f == 0) {
                p = f;
                break;
            }
        }
        if (p == q) return std::nullopt; // unreachable: composite q has a factor <= sqrt(q)
    }
    unsigned v = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++v;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, v);
}

} // namespace maxcurve

#endif
