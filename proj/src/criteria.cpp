#include "maxcurve/criteria.hpp"

#include <numeric>

#include <json.hpp>

#include "maxcurve/numeric.hpp"

namespace maxcurve {

namespace {

std::uint64_t hurwitz_invariant(std::uint64_t n) {
    if (n > (1ull << 31)) throw BadParameters("n too large");
    return n * n - n + 1;
}

std::uint64_t generalized_invariant(std::uint64_t n, std::uint64_t l) {
    if (n > (1ull << 31)) throw BadParameters("n too large");
    return n * n - n * l + l * l;
}

void require_prime_p(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime("p must be prime");
}

void require_k(std::uint64_t k) {
    if (k == 0) throw BadParameters("k must be at least 1");
}

} // namespace

mpz_class exact_q(std::uint64_t p, std::uint64_t k) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return q;
}

bool hurwitz_criterion(std::uint64_t n, std::uint64_t p, std::uint64_t k) {
    if (n < 2) throw BadParameters("hurwitz criterion needs n >= 2");
    require_prime_p(p);
    require_k(k);
    const std::uint64_t m = hurwitz_invariant(n);
    if (m % p == 0) throw CharacteristicDividesQ("p divides n^2-n+1");
    const mpz_class r = (exact_q(p, k) + 1) % mpz_class(static_cast<unsigned long>(m));
    return r == 0;
}

GeneralizedCriterionReport generalized_criterion_report(std::uint64_t n, std::uint64_t l,
                                                        std::uint64_t p, std::uint64_t k) {
    if (l < 2 || n < l) throw BadParameters("criterion needs n >= l >= 2");
    if (std::gcd(n, l) != 1) throw NotCoprime("criterion needs gcd(n, l) = 1");
    require_prime_p(p);
    require_k(k);
    const std::uint64_t Q = generalized_invariant(n, l);
    if (Q % p == 0) throw CharacteristicDividesQ("p divides n^2-nl+l^2");
    const mpz_class qp1 = exact_q(p, k) + 1;
    const mpz_class Qz(static_cast<unsigned long>(Q));
    GeneralizedCriterionReport rep;
    rep.holds = (qp1 % Qz == 0);
    rep.literal_form = (Qz % qp1 == 0);
    rep.q_prime = is_prime_u64(Q);
    return rep;
}

bool generalized_criterion(std::uint64_t n, std::uint64_t l, std::uint64_t p, std::uint64_t k) {
    return generalized_criterion_report(n, l, p, k).holds;
}

bool fermat_criterion(std::uint64_t m, std::uint64_t p, std::uint64_t k) {
    if (m < 1) throw BadParameters("fermat criterion needs m >= 1");
    require_prime_p(p);
    require_k(k);
    if (m % p == 0) throw CharacteristicDividesM("p divides m");
    const mpz_class r = (exact_q(p, k) + 1) % mpz_class(static_cast<unsigned long>(m));
    return r == 0;
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) throw BadParameters("phi(0) undefined");
    std::uint64_t result = m, rest = m;
    for (std::uint64_t f = 2; f * f <= rest; ++f) {
        if (rest % f != 0) continue;
        result -= result / f;
        while (rest % f == 0) rest /= f;
    }
    if (rest > 1) result -= result / rest;
    return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m < 2) throw BadParameters("order needs modulus >= 2");
    a %= m;
    if (std::gcd(a, m) != 1) throw NotCoprime("order needs gcd(a, m) = 1");
    std::uint64_t x = a % m, e = 1;
    while (x != 1) {
        x = mulmod_u64(x, a, m);
        ++e;
    }
    return e;
}

int legendre_symbol(std::int64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw EvenOrNonPrimeModulus("legendre symbol needs an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    const std::uint64_t s = powmod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return s == 1 ? 1 : -1;
}

std::vector<CongruenceSolution> admissible_exponent_residues(std::uint64_t m) {
    if (m < 2) throw BadParameters("modulus must be at least 2");
    const std::uint64_t phi = euler_phi(m);
    std::vector<CongruenceSolution> table;
    table.reserve(phi);
    for (std::uint64_t w = 1; w <= phi; ++w) {
        CongruenceSolution row{m, w, {}};
        for (std::uint64_t x = 1; x < m; ++x) {
            if (std::gcd(x, m) != 1) continue;
            if (powmod_u64(x, w, m) == m - 1) row.residues.push_back(x);
        }
        table.push_back(std::move(row));
    }
    return table;
}

std::string congruence_table_csv(const std::vector<CongruenceSolution>& table) {
    std::string out = "m,w,residues\n";
    for (const auto& row : table) {
        out += std::to_string(row.m) + "," + std::to_string(row.w) + ",";
        for (std::size_t i = 0; i < row.residues.size(); ++i) {
            if (i) out += ";";
            out += std::to_string(row.residues[i]);
        }
        out += "\n";
    }
    return out;
}

std::string congruence_table_json(const std::vector<CongruenceSolution>& table) {
    auto arr = nlohmann::json::array();
    for (const auto& row : table)
        arr.push_back({{"m", row.m}, {"w", row.w}, {"residues", row.residues}});
    return arr.dump();
}

PrimePowerExponent prime_power_n_exponent(std::uint64_t p, std::uint64_t e) {
    require_prime_p(p);
    if (e == 0) throw BadParameters("e must be at least 1");
    const mpz_class n_z = exact_q(p, e);
    if (!n_z.fits_ulong_p() || n_z.get_ui() > (1ull << 31))
        throw BadParameters("p^e too large");
    const std::uint64_t n = n_z.get_ui();
    const std::uint64_t m = hurwitz_invariant(n);
    const mpz_class lhs = exact_q(p, 3 * e) + 1;
    const mpz_class rhs = (exact_q(p, e) + 1) * (exact_q(p, 2 * e) - exact_q(p, e) + 1);
    if (lhs != rhs) throw Error("cube identity failed"); // algebraically impossible
    const std::uint64_t phi = euler_phi(m);
    std::uint64_t w = (3 * e) % phi;
    if (w == 0) w = phi;
    return PrimePowerExponent{m, w};
}

NonresidueExponent nonresidue_exponent(std::uint64_t p, std::uint64_t n) {
    require_prime_p(p);
    if (n < 2) throw BadParameters("n must be at least 2");
    NonresidueExponent out;
    out.m = hurwitz_invariant(n);
    if (p % 4 != 3) {
        out.failed_hypothesis = "p = 3 (mod 4)";
        return out;
    }
    if (n % p != 0 && n % p != 1) {
        out.failed_hypothesis = "n = 0 or 1 (mod p)";
        return out;
    }
    if (!is_prime_u64(out.m)) {
        out.failed_hypothesis = "n^2-n+1 prime";
        return out;
    }
    if (out.m % 4 != 3) {
        out.failed_hypothesis = "n^2-n+1 = 3 (mod 4)";
        return out;
    }
    if (powmod_u64(p % out.m, (out.m - 1) / 2, out.m) != out.m - 1)
        throw Error("nonresidue check failed"); // excluded by quadratic reciprocity
    out.exponent = (out.m - 1) / 2;
    return out;
}

HalfOrderExponent half_order_exponent(std::uint64_t p, std::uint64_t m) {
    if (m < 2) throw BadParameters("modulus must be at least 2");
    if (std::gcd(p % m, m) != 1) throw NotCoprime("needs gcd(p, m) = 1");
    HalfOrderExponent out;
    out.order = multiplicative_order(p % m, m);
    if (out.order % 2 != 0) return out;
    const std::uint64_t i = out.order / 2;
    const std::uint64_t x = powmod_u64(p % m, i, m);
    if (x == m - 1) {
        out.exponent = i;
        return out;
    }
    // x^2 = 1 with x != 1 and x != -1: both x-1 and x+1 share a factor with m
    out.zero_divisor_case = true;
    if (std::gcd(x - 1, m) == 1 || std::gcd(x + 1, m) == 1)
        throw Error("zero divisor analysis failed"); // impossible for x^2 = 1, x != +-1
    return out;
}

} // namespace maxcurve
