#include "maxcurve/curves.hpp"

#include <numeric>

#include <json.hpp>

#include "maxcurve/numeric.hpp"

namespace maxcurve {

namespace {

std::uint64_t hurwitz_invariant(std::uint64_t n) {
    // n^2 - n + 1 with an overflow guard; parameters past 2^31 are nonsense here
    if (n > (1ull << 31)) throw BadParameters("n too large");
    return n * n - n + 1;
}

std::uint64_t generalized_invariant(std::uint64_t n, std::uint64_t l) {
    if (n > (1ull << 31)) throw BadParameters("n too large");
    return n * n - n * l + l * l;
}

FieldElement evaluate_terms(const std::vector<CurveTerm>& terms, const Field& f,
                            const ProjectivePoint& pt) {
    FieldElement acc = f.zero();
    for (const auto& t : terms) {
        FieldElement v = t.coeff;
        if (t.i) v = v * pt.x.pow(static_cast<std::int64_t>(t.i));
        if (t.j) v = v * pt.y.pow(static_cast<std::int64_t>(t.j));
        if (t.k) v = v * pt.z.pow(static_cast<std::int64_t>(t.k));
        acc = acc + v;
    }
    return acc;
}

// Formal partial derivative along one axis; terms whose exponent vanishes
// mod p drop out.
std::vector<CurveTerm> partial(const std::vector<CurveTerm>& terms, const Field& f, int axis) {
    std::vector<CurveTerm> out;
    for (const auto& t : terms) {
        unsigned e = axis == 0 ? t.i : axis == 1 ? t.j : t.k;
        if (e == 0 || e % f.p() == 0) continue;
        CurveTerm d = t;
        d.coeff = t.coeff * f.from_int(e % f.p());
        if (axis == 0)
            --d.i;
        else if (axis == 1)
            --d.j;
        else
            --d.k;
        out.push_back(d);
    }
    return out;
}

} // namespace

const char* family_name(CurveFamily f) {
    switch (f) {
    case CurveFamily::hermitian: return "hermitian";
    case CurveFamily::hurwitz: return "hurwitz";
    case CurveFamily::generalized_hurwitz: return "generalized";
    case CurveFamily::fermat: return "fermat";
    case CurveFamily::custom: return "custom";
    }
    return "?";
}

ProjectivePoint make_point(const FieldElement& x, const FieldElement& y, const FieldElement& z) {
    if (!x.is_zero()) {
        FieldElement s = x.inv();
        return ProjectivePoint{x.field().one(), y * s, z * s};
    }
    if (!y.is_zero()) {
        FieldElement s = y.inv();
        return ProjectivePoint{x, y.field().one(), z * s};
    }
    if (!z.is_zero()) return ProjectivePoint{x, y, z.field().one()};
    throw BadParameters("(0, 0, 0) is not a projective point");
}

std::string point_str(const ProjectivePoint& pt) {
    return "(" + pt.x.str() + ":" + pt.y.str() + ":" + pt.z.str() + ")";
}

PlaneCurve make_hermitian(const Field& f) {
    const unsigned d = static_cast<unsigned>(f.q() + 1);
    std::vector<CurveTerm> terms = {
        {d, 0, 0, f.one()}, {0, d, 0, f.one()}, {0, 0, d, f.one()}};
    return PlaneCurve{CurveFamily::hermitian, 0, 0, 0, d, f, std::move(terms)};
}

PlaneCurve make_hurwitz(std::uint64_t n, const Field& f) {
    if (n < 2) throw BadParameters("hurwitz needs n >= 2");
    if (hurwitz_invariant(n) % f.p() == 0)
        throw CharacteristicDividesQ("p divides n^2-n+1");
    const unsigned nn = static_cast<unsigned>(n);
    std::vector<CurveTerm> terms = {
        {nn, 1, 0, f.one()}, {0, nn, 1, f.one()}, {1, 0, nn, f.one()}};
    return PlaneCurve{CurveFamily::hurwitz, n, 0, 0, nn + 1, f, std::move(terms)};
}

PlaneCurve make_generalized_hurwitz(std::uint64_t n, std::uint64_t l, const Field& f) {
    if (l < 2 || n < l) throw BadParameters("generalized hurwitz needs n >= l >= 2");
    if (generalized_invariant(n, l) % f.p() == 0)
        throw CharacteristicDividesQ("p divides n^2-nl+l^2");
    const unsigned nn = static_cast<unsigned>(n), ll = static_cast<unsigned>(l);
    std::vector<CurveTerm> terms = {
        {nn, ll, 0, f.one()}, {0, nn, ll, f.one()}, {ll, 0, nn, f.one()}};
    return PlaneCurve{CurveFamily::generalized_hurwitz, n, l, 0, nn + ll, f, std::move(terms)};
}

PlaneCurve make_fermat(std::uint64_t m, const Field& f) {
    if (m < 1) throw BadParameters("fermat needs m >= 1");
    if (m > (1u << 20)) throw BadParameters("m too large");
    const unsigned mm = static_cast<unsigned>(m);
    std::vector<CurveTerm> terms = {
        {mm, 0, 0, f.one()}, {0, mm, 0, f.one()}, {0, 0, mm, f.one()}};
    return PlaneCurve{CurveFamily::fermat, 0, 0, m, mm, f, std::move(terms)};
}

PlaneCurve make_custom(std::vector<CurveTerm> terms, const Field& f) {
    if (terms.empty()) throw BadParameters("custom curve needs at least one term");
    const unsigned d = terms[0].i + terms[0].j + terms[0].k;
    for (const auto& t : terms) {
        if (t.i + t.j + t.k != d)
            throw BadParameters("custom curve terms must share one total degree");
        if (t.coeff.is_zero()) throw BadParameters("custom curve coefficients must be nonzero");
        if (!t.coeff.field().same_field(f)) throw MixedFields("coefficient from another field");
    }
    return PlaneCurve{CurveFamily::custom, 0, 0, 0, d, f, std::move(terms)};
}

FieldElement evaluate(const PlaneCurve& c, const ProjectivePoint& pt) {
    return evaluate_terms(c.terms, c.field, pt);
}

bool is_on_curve(const PlaneCurve& c, const ProjectivePoint& pt) {
    return evaluate(c, pt).is_zero();
}

void for_each_projective_point(const Field& f,
                               const std::function<void(const ProjectivePoint&)>& fn) {
    const auto all = f.elements();
    const FieldElement zero = f.zero(), one = f.one();
    for (const auto& y : all)
        for (const auto& z : all) fn(ProjectivePoint{one, y, z});
    for (const auto& z : all) fn(ProjectivePoint{zero, one, z});
    fn(ProjectivePoint{zero, zero, one});
}

std::vector<ProjectivePoint> singular_locus(const PlaneCurve& c, std::uint64_t budget) {
    const std::uint64_t size = c.field.size();
    if (size * size > budget) throw BudgetExceeded("singular locus scan exceeds budget");
    const auto dx = partial(c.terms, c.field, 0);
    const auto dy = partial(c.terms, c.field, 1);
    const auto dz = partial(c.terms, c.field, 2);
    std::vector<ProjectivePoint> out;
    for_each_projective_point(c.field, [&](const ProjectivePoint& pt) {
        if (!evaluate_terms(c.terms, c.field, pt).is_zero()) return;
        if (!evaluate_terms(dx, c.field, pt).is_zero()) return;
        if (!evaluate_terms(dy, c.field, pt).is_zero()) return;
        if (!evaluate_terms(dz, c.field, pt).is_zero()) return;
        out.push_back(pt);
    });
    return out;
}

std::uint64_t genus_nonsingular_plane(std::uint64_t d) {
    if (d < 3) return 0;
    return (d - 1) * (d - 2) / 2;
}

std::uint64_t delta_invariant(std::uint64_t n, std::uint64_t l) {
    if (l < 2 || n < l) throw BadParameters("delta invariant needs n >= l >= 2");
    return (n * l - n - l + std::gcd(n, l)) / 2;
}

std::uint64_t genus_generalized_hurwitz(std::uint64_t n, std::uint64_t l) {
    if (l < 2 || n < l) throw BadParameters("genus formula needs n >= l >= 2");
    return (n * n - n * l + l * l + 2 - 3 * std::gcd(n, l)) / 2;
}

std::uint64_t genus_of(const PlaneCurve& c) {
    switch (c.family) {
    case CurveFamily::hermitian:
    case CurveFamily::hurwitz:
        return genus_nonsingular_plane(c.degree);
    case CurveFamily::fermat:
        if (c.m % c.field.p() == 0)
            throw CharacteristicDividesM("fermat curve is non-reduced when p | m");
        return genus_nonsingular_plane(c.degree);
    case CurveFamily::generalized_hurwitz:
        return genus_generalized_hurwitz(c.n, c.l);
    case CurveFamily::custom:
        throw NoGenusFormula("no genus formula for custom curves");
    }
    throw NoGenusFormula("unknown family");
}

std::string curve_str(const PlaneCurve& c) {
    const std::string tail =
        ":" + std::to_string(c.field.p()) + ":" + std::to_string(c.field.k());
    switch (c.family) {
    case CurveFamily::hermitian:
        return "hermitian:" + tail;
    case CurveFamily::hurwitz:
        return "hurwitz:" + std::to_string(c.n) + tail;
    case CurveFamily::generalized_hurwitz:
        return "generalized:" + std::to_string(c.n) + "," + std::to_string(c.l) + tail;
    case CurveFamily::fermat:
        return "fermat:" + std::to_string(c.m) + tail;
    case CurveFamily::custom: {
        nlohmann::json j;
        j["family"] = "custom";
        j["p"] = c.field.p();
        j["k"] = c.field.k();
        auto terms = nlohmann::json::array();
        for (const auto& t : c.terms) {
            auto coeffs = nlohmann::json::array();
            for (auto x : t.coeff.coeffs()) coeffs.push_back(x);
            terms.push_back(nlohmann::json::array({t.i, t.j, t.k, coeffs}));
        }
        j["terms"] = std::move(terms);
        return j.dump();
    }
    }
    throw BadParameters("unknown family");
}

namespace {

PlaneCurve parse_custom_json(const std::string& text, std::uint64_t budget) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadParameters(std::string("bad curve JSON: ") + e.what());
    }
    try {
        if (j.at("family").get<std::string>() != "custom")
            throw BadParameters("JSON curve form is only for the custom family");
        Field f = Field::create(j.at("p").get<std::uint64_t>(), j.at("k").get<unsigned>(), budget);
        std::vector<CurveTerm> terms;
        for (const auto& t : j.at("terms")) {
            std::vector<std::uint16_t> coeffs;
            for (const auto& x : t.at(3)) coeffs.push_back(x.get<std::uint16_t>());
            terms.push_back(CurveTerm{t.at(0).get<unsigned>(), t.at(1).get<unsigned>(),
                                      t.at(2).get<unsigned>(), f.from_coeffs(coeffs)});
        }
        return make_custom(std::move(terms), f);
    } catch (const nlohmann::json::exception& e) {
        throw BadParameters(std::string("bad curve JSON: ") + e.what());
    }
}

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw BadParameters("expected a nonnegative integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw BadParameters("integer out of range: '" + s + "'");
    }
}

} // namespace

PlaneCurve parse_curve(const std::string& text, std::uint64_t field_size_budget) {
    if (!text.empty() && text[0] == '{') return parse_custom_json(text, field_size_budget);
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(':', start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    if (parts.size() == 3) parts.insert(parts.begin() + 1, ""); // family:p:k shorthand
    if (parts.size() != 4) throw BadParameters("curve form is family:params:p:k");
    const std::string& fam = parts[0];
    const std::string& params = parts[1];
    Field f = Field::create(parse_u64(parts[2]), static_cast<unsigned>(parse_u64(parts[3])),
                            field_size_budget);
    if (fam == "hermitian") {
        if (!params.empty()) throw BadParameters("hermitian takes no parameters");
        return make_hermitian(f);
    }
    if (fam == "hurwitz") return make_hurwitz(parse_u64(params), f);
    if (fam == "generalized") {
        std::size_t comma = params.find(',');
        if (comma == std::string::npos)
            throw BadParameters("generalized parameters are n,l");
        return make_generalized_hurwitz(parse_u64(params.substr(0, comma)),
                                        parse_u64(params.substr(comma + 1)), f);
    }
    if (fam == "fermat") return make_fermat(parse_u64(params), f);
    throw BadParameters("unknown family '" + fam + "'");
}

} // namespace maxcurve
