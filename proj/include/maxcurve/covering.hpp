#ifndef MAXCURVE_COVERING_HPP
#define MAXCURVE_COVERING_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "maxcurve/curves.hpp"
#include "maxcurve/point_count.hpp"

// Pointwise verification of the covering maps between the curve families:
// every domain point where a map is defined must land on the target curve.
// Points needing an inversion at a zero coordinate are counted as excluded,
// not failures.

namespace maxcurve {

enum class CoveringMap {
    fermat_to_hurwitz,     // (u, v) -> (u^n v^-1, u v^(n-1)), m = n^2-n+1
    fermat_to_generalized, // (u, v) -> (u^n v^-l, u^l v^(n-l)), m = n^2-nl+l^2
    hermitian_to_fermat,   // coordinatewise power (q+1)/m, m | q+1
    hermitian_to_hurwitz,  // the two above composed through degree n^2-n+1
};

const char* covering_map_name(CoveringMap m);

// Affine covering map onto the Hurwitz curve x^n y + y^n + x = 0;
// UndefinedAtPoint when v = 0.
std::pair<FieldElement, FieldElement> fermat_to_hurwitz_map(const FieldElement& u,
                                                            const FieldElement& v,
                                                            std::uint64_t n);

// Affine covering map onto x^n y^l + y^n + x^l = 0; UndefinedAtPoint when v = 0.
std::pair<FieldElement, FieldElement> fermat_to_generalized_map(const FieldElement& u,
                                                                const FieldElement& v,
                                                                std::uint64_t n, std::uint64_t l);

// Coordinatewise power (q+1)/m; DivisibilityFails unless m | q+1. Defined
// on all of P^2 and keeps points normalized.
ProjectivePoint hermitian_to_fermat_map(const ProjectivePoint& pt, std::uint64_t m);

struct CoveringReport {
    CoveringMap map = CoveringMap::fermat_to_hurwitz;
    std::string domain, target; // canonical curve text
    std::uint64_t domain_points = 0;
    std::uint64_t checked = 0;  // domain points where the map is defined
    std::uint64_t excluded = 0; // domain points where it is not
    std::uint64_t on_target = 0;
    bool ok = false; // on_target == checked
};

// Enumerates the domain curve and pushes every point through the map.
// Throws IncompatibleParameters when the family parameters do not match
// the map, DivisibilityFails for a bad Hermitian power, MixedFields when
// the curves live over different fields.
CoveringReport verify_covering(const PlaneCurve& domain, CoveringMap map,
                               const PlaneCurve& target,
                               std::uint64_t budget = kDefaultPointBudget);

// Map inferred from the two families; IncompatibleParameters when no map
// connects them.
CoveringMap covering_map_for(const PlaneCurve& domain, const PlaneCurve& target);

std::string covering_json(const CoveringReport& r);

} // namespace maxcurve

#endif
