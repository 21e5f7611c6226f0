#include "maxcurve/covering.hpp"

#include <json.hpp>

namespace maxcurve {

namespace {

std::uint64_t hurwitz_invariant(std::uint64_t n) { return n * n - n + 1; }

std::uint64_t generalized_invariant(std::uint64_t n, std::uint64_t l) {
    return n * n - n * l + l * l;
}

} // namespace

const char* covering_map_name(CoveringMap m) {
    switch (m) {
    case CoveringMap::fermat_to_hurwitz: return "fermat_to_hurwitz";
    case CoveringMap::fermat_to_generalized: return "fermat_to_generalized";
    case CoveringMap::hermitian_to_fermat: return "hermitian_to_fermat";
    case CoveringMap::hermitian_to_hurwitz: return "hermitian_to_hurwitz";
    }
    return "?";
}

std::pair<FieldElement, FieldElement> fermat_to_hurwitz_map(const FieldElement& u,
                                                            const FieldElement& v,
                                                            std::uint64_t n) {
    if (v.is_zero()) throw UndefinedAtPoint("map needs v != 0");
    const std::int64_t ni = static_cast<std::int64_t>(n);
    return {u.pow(ni) * v.inv(), u * v.pow(ni - 1)};
}

std::pair<FieldElement, FieldElement> fermat_to_generalized_map(const FieldElement& u,
                                                                const FieldElement& v,
                                                                std::uint64_t n,
                                                                std::uint64_t l) {
    if (v.is_zero()) throw UndefinedAtPoint("map needs v != 0");
    const std::int64_t ni = static_cast<std::int64_t>(n), li = static_cast<std::int64_t>(l);
    return {u.pow(ni) * v.pow(-li), u.pow(li) * v.pow(ni - li)};
}

ProjectivePoint hermitian_to_fermat_map(const ProjectivePoint& pt, std::uint64_t m) {
    const std::uint64_t q = pt.x.field().q();
    if (m == 0 || (q + 1) % m != 0) throw DivisibilityFails("m must divide q+1");
    const std::int64_t e = static_cast<std::int64_t>((q + 1) / m);
    return ProjectivePoint{pt.x.pow(e), pt.y.pow(e), pt.z.pow(e)};
}

CoveringMap covering_map_for(const PlaneCurve& domain, const PlaneCurve& target) {
    if (domain.family == CurveFamily::fermat && target.family == CurveFamily::hurwitz)
        return CoveringMap::fermat_to_hurwitz;
    if (domain.family == CurveFamily::fermat &&
        target.family == CurveFamily::generalized_hurwitz)
        return CoveringMap::fermat_to_generalized;
    if (domain.family == CurveFamily::hermitian && target.family == CurveFamily::fermat)
        return CoveringMap::hermitian_to_fermat;
    if (domain.family == CurveFamily::hermitian && target.family == CurveFamily::hurwitz)
        return CoveringMap::hermitian_to_hurwitz;
    throw IncompatibleParameters("no covering map between these families");
}

CoveringReport verify_covering(const PlaneCurve& domain, CoveringMap map,
                               const PlaneCurve& target, std::uint64_t budget) {
    if (!domain.field.same_field(target.field))
        throw MixedFields("domain and target must share one field");
    const std::uint64_t size = domain.field.size();
    if (static_cast<unsigned __int128>(size) * size > budget)
        throw BudgetExceeded("covering verification budget is q^4 evaluations");

    // Parameter compatibility per map.
    switch (map) {
    case CoveringMap::fermat_to_hurwitz:
        if (domain.family != CurveFamily::fermat || target.family != CurveFamily::hurwitz)
            throw IncompatibleParameters("map goes fermat -> hurwitz");
        if (domain.m != hurwitz_invariant(target.n))
            throw IncompatibleParameters("fermat degree must be n^2-n+1");
        break;
    case CoveringMap::fermat_to_generalized:
        if (domain.family != CurveFamily::fermat ||
            target.family != CurveFamily::generalized_hurwitz)
            throw IncompatibleParameters("map goes fermat -> generalized");
        if (domain.m != generalized_invariant(target.n, target.l))
            throw IncompatibleParameters("fermat degree must be n^2-nl+l^2");
        break;
    case CoveringMap::hermitian_to_fermat:
        if (domain.family != CurveFamily::hermitian || target.family != CurveFamily::fermat)
            throw IncompatibleParameters("map goes hermitian -> fermat");
        if (target.m == 0 || (domain.field.q() + 1) % target.m != 0)
            throw DivisibilityFails("fermat degree must divide q+1");
        break;
    case CoveringMap::hermitian_to_hurwitz:
        if (domain.family != CurveFamily::hermitian || target.family != CurveFamily::hurwitz)
            throw IncompatibleParameters("map goes hermitian -> hurwitz");
        if ((domain.field.q() + 1) % hurwitz_invariant(target.n) != 0)
            throw DivisibilityFails("n^2-n+1 must divide q+1");
        break;
    }

    CoveringReport rep;
    rep.map = map;
    rep.domain = curve_str(domain);
    rep.target = curve_str(target);
    const FieldElement one = domain.field.one();

    for_each_projective_point(domain.field, [&](const ProjectivePoint& pt) {
        if (!is_on_curve(domain, pt)) return;
        ++rep.domain_points;

        ProjectivePoint moved = pt;
        if (map == CoveringMap::hermitian_to_fermat || map == CoveringMap::hermitian_to_hurwitz) {
            const std::uint64_t inner_m = map == CoveringMap::hermitian_to_fermat
                                              ? target.m
                                              : hurwitz_invariant(target.n);
            moved = hermitian_to_fermat_map(pt, inner_m);
            if (map == CoveringMap::hermitian_to_fermat) {
                ++rep.checked;
                if (is_on_curve(target, moved)) ++rep.on_target;
                return;
            }
        }

        // Affine leg: needs the z = 1 chart and v != 0.
        if (moved.z.is_zero() || moved.y.is_zero()) {
            ++rep.excluded;
            return;
        }
        const FieldElement zi = moved.z.inv();
        const FieldElement u = moved.x * zi, v = moved.y * zi;
        std::pair<FieldElement, FieldElement> img =
            map == CoveringMap::fermat_to_generalized
                ? fermat_to_generalized_map(u, v, target.n, target.l)
                : fermat_to_hurwitz_map(u, v, target.n);
        ++rep.checked;
        if (is_on_curve(target, ProjectivePoint{img.first, img.second, one})) ++rep.on_target;
    });

    rep.ok = (rep.on_target == rep.checked);
    return rep;
}

std::string covering_json(const CoveringReport& r) {
    nlohmann::json j;
    j["map"] = covering_map_name(r.map);
    j["domain"] = r.domain;
    j["target"] = r.target;
    j["domain_points"] = r.domain_points;
    j["checked"] = r.checked;
    j["excluded"] = r.excluded;
    j["on_target"] = r.on_target;
    j["ok"] = r.ok;
    return j.dump();
}

} // namespace maxcurve
