#include "maxcurve/finite_field.hpp"

#include <array>
#include <cstdint>

#include "maxcurve/numeric.hpp"

namespace maxcurve {

// Largest ext_degree under the default budget is 20 (p = 2, k = 10).
static constexpr unsigned kMaxDeg = 20;

struct Field::Data {
    std::uint64_t p = 0;
    unsigned k = 0;
    unsigned deg = 0; // 2k
    std::uint64_t q = 0;
    std::uint64_t size = 0;
    std::vector<std::uint16_t> modulus; // monic, length deg + 1
};

namespace {

using Coeffs = std::vector<std::uint16_t>;

int poly_degree(const Coeffs& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// a mod b over F_p, b monic. Returns true when the remainder is zero.
bool divides(const Coeffs& b, Coeffs a, std::uint64_t p) {
    const int db = poly_degree(b);
    for (int i = poly_degree(a); i >= db; i = poly_degree(a)) {
        const std::uint64_t c = a[i];
        for (int j = 0; j <= db; ++j) {
            const std::uint64_t sub = (c * b[j]) % p;
            a[i - db + j] = static_cast<std::uint16_t>((a[i - db + j] + p - sub) % p);
        }
    }
    return poly_degree(a) < 0;
}

// No monic factor of degree <= deg/2. Trial divisors enumerated low degree
// first so multiples of t fall out after one division.
bool is_irreducible(const Coeffs& f, std::uint64_t p) {
    const int d = poly_degree(f);
    for (int e = 1; 2 * e <= d; ++e) {
        const std::uint64_t count = checked_pow_u64(p, static_cast<unsigned>(e));
        Coeffs g(static_cast<std::size_t>(e) + 1, 0);
        g[e] = 1;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::uint64_t rest = v;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<std::uint16_t>(rest % p);
                rest /= p;
            }
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

// Least monic irreducible of degree d, coefficients compared lexicographically
// from the constant term up. The constant term starts at 1: anything with
// constant term 0 is divisible by t.
Coeffs smallest_irreducible(std::uint64_t p, unsigned d) {
    Coeffs f(d + 1, 0);
    f[d] = 1;
    const std::uint64_t inner = checked_pow_u64(p, d - 1);
    for (std::uint64_t c0 = 1; c0 < p; ++c0) {
        f[0] = static_cast<std::uint16_t>(c0);
        for (std::uint64_t v = 0; v < inner; ++v) {
            std::uint64_t rest = v;
            for (unsigned pos = d - 1; pos >= 1; --pos) {
                f[pos] = static_cast<std::uint16_t>(rest % p);
                rest /= p;
            }
            if (is_irreducible(f, p)) return f;
        }
    }
    throw Error("no irreducible polynomial found"); // unreachable: they exist for every p, d
}

const Field::Data& data_of(const std::shared_ptr<const void>& d) {
    if (!d) throw MixedFields("element has no field");
    return *static_cast<const Field::Data*>(d.get());
}

void require_same(const Field::Data& a, const Field::Data& b) {
    if (a.p != b.p || a.k != b.k)
        throw MixedFields("elements belong to different fields");
}

} // namespace

Field Field::create(std::uint64_t p, unsigned k, std::uint64_t size_budget) {
    if (!is_prime_u64(p)) throw NotPrime("p must be prime");
    if (k == 0) throw BadParameters("k must be at least 1");
    std::uint64_t size = 1;
    for (unsigned i = 0; i < 2 * k; ++i) {
        if (size > size_budget / p)
            throw BudgetExceeded("field size p^(2k) exceeds budget");
        size *= p;
    }
    auto d = std::make_shared<Data>();
    d->p = p;
    d->k = k;
    d->deg = 2 * k;
    d->q = checked_pow_u64(p, k);
    d->size = size;
    d->modulus = smallest_irreducible(p, d->deg);
    return Field(std::move(d));
}

std::uint64_t Field::p() const { return data_->p; }
unsigned Field::k() const { return data_->k; }
unsigned Field::ext_degree() const { return data_->deg; }
std::uint64_t Field::q() const { return data_->q; }
std::uint64_t Field::size() const { return data_->size; }
const std::vector<std::uint16_t>& Field::modulus() const { return data_->modulus; }

FieldElement Field::zero() const {
    return FieldElement(data_, Coeffs(data_->deg, 0));
}

FieldElement Field::one() const {
    Coeffs c(data_->deg, 0);
    c[0] = 1;
    return FieldElement(data_, std::move(c));
}

FieldElement Field::gen() const {
    Coeffs c(data_->deg, 0);
    c[1] = 1;
    return FieldElement(data_, std::move(c));
}

FieldElement Field::from_int(std::uint64_t v) const {
    Coeffs c(data_->deg, 0);
    c[0] = static_cast<std::uint16_t>(v % data_->p);
    return FieldElement(data_, std::move(c));
}

FieldElement Field::from_coeffs(const std::vector<std::uint16_t>& c) const {
    if (c.size() != data_->deg)
        throw BadParameters("coefficient vector length must equal ext_degree");
    Coeffs r(c);
    for (auto& x : r) x = static_cast<std::uint16_t>(x % data_->p);
    return FieldElement(data_, std::move(r));
}

FieldElement Field::element(std::uint64_t index) const {
    if (index >= data_->size) throw BadParameters("element index out of range");
    Coeffs c(data_->deg, 0);
    for (unsigned i = 0; i < data_->deg; ++i) {
        c[i] = static_cast<std::uint16_t>(index % data_->p);
        index /= data_->p;
    }
    return FieldElement(data_, std::move(c));
}

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> all;
    all.reserve(data_->size);
    for (std::uint64_t i = 0; i < data_->size; ++i) all.push_back(element(i));
    return all;
}

bool Field::same_field(const Field& rhs) const {
    return data_->p == rhs.data_->p && data_->k == rhs.data_->k;
}

bool FieldElement::is_zero() const {
    for (auto x : c_)
        if (x != 0) return false;
    return true;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    const auto& d = data_of(data_);
    require_same(d, data_of(rhs.data_));
    Coeffs r(d.deg);
    for (unsigned i = 0; i < d.deg; ++i)
        r[i] = static_cast<std::uint16_t>((static_cast<std::uint64_t>(c_[i]) + rhs.c_[i]) % d.p);
    return FieldElement(data_, std::move(r));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    const auto& d = data_of(data_);
    require_same(d, data_of(rhs.data_));
    Coeffs r(d.deg);
    for (unsigned i = 0; i < d.deg; ++i)
        r[i] = static_cast<std::uint16_t>((static_cast<std::uint64_t>(c_[i]) + d.p - rhs.c_[i]) % d.p);
    return FieldElement(data_, std::move(r));
}

FieldElement FieldElement::operator-() const {
    const auto& d = data_of(data_);
    Coeffs r(d.deg);
    for (unsigned i = 0; i < d.deg; ++i)
        r[i] = static_cast<std::uint16_t>((d.p - c_[i]) % d.p);
    return FieldElement(data_, std::move(r));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    const auto& d = data_of(data_);
    require_same(d, data_of(rhs.data_));
    const unsigned deg = d.deg;
    std::array<std::uint64_t, 2 * kMaxDeg> prod{};
    for (unsigned i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        const std::uint64_t a = c_[i];
        for (unsigned j = 0; j < deg; ++j) prod[i + j] += a * rhs.c_[j];
    }
    for (unsigned i = 0; i < 2 * deg - 1; ++i) prod[i] %= d.p;
    // fold degrees >= deg using the monic modulus
    for (unsigned i = 2 * deg - 2; i >= deg && i < 2 * kMaxDeg; --i) {
        const std::uint64_t c = prod[i];
        if (c == 0) continue;
        for (unsigned j = 0; j <= deg; ++j) {
            const std::uint64_t sub = (c * d.modulus[j]) % d.p;
            prod[i - deg + j] = (prod[i - deg + j] + d.p - sub) % d.p;
        }
    }
    Coeffs r(deg);
    for (unsigned i = 0; i < deg; ++i) r[i] = static_cast<std::uint16_t>(prod[i]);
    return FieldElement(data_, std::move(r));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    const auto& d = data_of(data_);
    require_same(d, data_of(rhs.data_));
    return c_ == rhs.c_;
}

FieldElement FieldElement::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const auto& d = data_of(data_);
    return pow(static_cast<std::int64_t>(d.size - 2));
}

FieldElement FieldElement::pow(std::int64_t e) const {
    const auto& d = data_of(data_);
    FieldElement base = *this;
    std::uint64_t mag;
    if (e < 0) {
        base = inv();
        mag = static_cast<std::uint64_t>(-(e + 1)) + 1;
    } else {
        mag = static_cast<std::uint64_t>(e);
    }
    Coeffs one_c(d.deg, 0);
    one_c[0] = 1;
    FieldElement r(data_, std::move(one_c));
    while (mag > 0) {
        if (mag & 1) r = r * base;
        base = base * base;
        mag >>= 1;
    }
    return r;
}

std::uint64_t FieldElement::index() const {
    const auto& d = data_of(data_);
    std::uint64_t idx = 0;
    for (unsigned i = d.deg; i-- > 0;) idx = idx * d.p + c_[i];
    return idx;
}

std::string FieldElement::str() const {
    std::string s;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) s += std::to_string(c_[i]);
            s += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

Field FieldElement::field() const {
    if (!data_) throw MixedFields("element has no field");
    return Field(std::static_pointer_cast<const Field::Data>(data_));
}

} // namespace maxcurve
