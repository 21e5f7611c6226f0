#include "maxcurve/semigroup.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace maxcurve {

namespace {

// A semigroup table is trustworthy past its bound when the top window of
// width min-member is all members: adding the minimal member then reaches
// everything beyond the bound.
bool window_closed(const std::vector<bool>& member) {
    std::uint64_t g1 = 0;
    for (std::uint64_t x = 1; x < member.size(); ++x) {
        if (member[x]) {
            g1 = x;
            break;
        }
    }
    if (g1 == 0) return false;
    if (member.size() < g1 + 1) return false;
    for (std::uint64_t x = member.size() - g1; x < member.size(); ++x)
        if (!member[x]) return false;
    return true;
}

std::vector<std::uint64_t> collect_gaps(const std::vector<bool>& member) {
    std::vector<std::uint64_t> gaps;
    for (std::uint64_t x = 1; x < member.size(); ++x)
        if (!member[x]) gaps.push_back(x);
    return gaps;
}

} // namespace

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<std::uint64_t> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty() || gens[0] == 0) throw BadParameters("generators must be positive");
    std::uint64_t g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g != 1) throw GcdNotOne("generators must have gcd 1");

    // Product of the two smallest generators passes the Frobenius number
    // whenever those two are coprime; the window check below covers the rest.
    std::uint64_t bound =
        gens.size() == 1 ? 2 * gens[0] : 2 * gens[0] * gens[1];
    for (;;) {
        std::vector<bool> member(bound + 1, false);
        member[0] = true;
        for (std::uint64_t x = 1; x <= bound; ++x)
            for (auto gen : gens) {
                if (gen > x) break;
                if (member[x - gen]) {
                    member[x] = true;
                    break;
                }
            }
        if (window_closed(member)) {
            NumericalSemigroup sg;
            sg.member_ = std::move(member);
            sg.gaps_ = collect_gaps(sg.member_);
            sg.gens_ = std::move(gens);
            return sg;
        }
        if (bound > (1ull << 26)) throw Error("semigroup closure did not stabilize");
        bound *= 2;
    }
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<bool>& member,
                                                       std::vector<std::uint64_t> gens) {
    if (member.empty() || !member[0]) throw BadParameters("0 must be a member");
    if (!window_closed(member))
        throw GcdNotOne("membership table does not stabilize below its bound");
    NumericalSemigroup sg;
    sg.member_ = member;
    sg.gaps_ = collect_gaps(member);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    sg.gens_ = std::move(gens);
    return sg;
}

bool NumericalSemigroup::contains(std::uint64_t x) const {
    if (x < member_.size()) return member_[x];
    return true; // past the verified window everything is a member
}

std::int64_t NumericalSemigroup::frobenius_number() const {
    if (gaps_.empty()) return -1;
    return static_cast<std::int64_t>(gaps_.back());
}

std::uint64_t NumericalSemigroup::conductor() const {
    return static_cast<std::uint64_t>(frobenius_number() + 1);
}

std::vector<std::uint64_t> hurwitz_weierstrass_generators(std::uint64_t n) {
    if (n < 2) throw BadParameters("needs n >= 2");
    std::vector<std::uint64_t> gens;
    gens.reserve(n);
    for (std::uint64_t s = 1; s <= n; ++s) gens.push_back(s * (n - 1) + 1);
    return gens;
}

NumericalSemigroup hurwitz_weierstrass_semigroup(std::uint64_t n) {
    return NumericalSemigroup::from_generators(hurwitz_weierstrass_generators(n));
}

bool generalized_weierstrass_member(std::uint64_t n, std::uint64_t l, std::uint64_t x) {
    if (l < 1 || n <= l) throw BadParameters("needs n > l >= 1");
    if (std::gcd(n, l) != 1) throw NotCoprime("needs gcd(n, l) = 1");
    const std::int64_t ni = static_cast<std::int64_t>(n), li = static_cast<std::int64_t>(l);
    const std::int64_t xi = static_cast<std::int64_t>(x);
    for (std::int64_t t = 0; t <= xi; ++t) {
        const std::int64_t rem = xi - ni * t;
        if (rem % (ni - li) != 0) continue;
        const std::int64_t s = rem / (ni - li);
        if (-li * t <= ni * s && li * s <= (ni - li) * t) return true;
    }
    return false;
}

NumericalSemigroup generalized_weierstrass_semigroup(std::uint64_t n, std::uint64_t l) {
    if (l < 1 || n <= l) throw BadParameters("needs n > l >= 1");
    if (std::gcd(n, l) != 1) throw NotCoprime("needs gcd(n, l) = 1");
    const std::uint64_t bound = 2 * (n * n - n * l + l * l);
    std::vector<bool> member(bound + 1, false);
    for (std::uint64_t x = 0; x <= bound; ++x)
        member[x] = generalized_weierstrass_member(n, l, x);
    return NumericalSemigroup::from_membership(member);
}

std::array<std::int64_t, 3> monomial_divisor_coefficients(std::uint64_t n, std::uint64_t l,
                                                          std::int64_t s, std::int64_t t) {
    if (l < 1 || n <= l) throw BadParameters("needs n > l >= 1");
    const std::int64_t ni = static_cast<std::int64_t>(n), li = static_cast<std::int64_t>(l);
    return {ni * s + li * t, -li * s + (ni - li) * t, -((ni - li) * s + ni * t)};
}

std::uint64_t smallest_member_divisor(std::uint64_t m, const NumericalSemigroup& sg) {
    if (m == 0) throw BadParameters("m must be positive");
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        if (sg.contains(d)) return d;
    }
    // large divisors, ascending
    std::vector<std::uint64_t> big;
    for (std::uint64_t d = 1; d * d <= m; ++d)
        if (m % d == 0) big.push_back(m / d);
    std::sort(big.begin(), big.end());
    for (auto d : big)
        if (sg.contains(d)) return d;
    throw BadParameters("no divisor of m is a nongap");
}

std::string semigroup_json(const NumericalSemigroup& sg) {
    nlohmann::json j;
    j["generators"] = sg.generators();
    j["gaps"] = sg.gaps();
    j["genus"] = sg.genus();
    j["frobenius"] = sg.frobenius_number();
    j["conductor"] = sg.conductor();
    j["bound"] = sg.bound();
    return j.dump();
}

} // namespace maxcurve
