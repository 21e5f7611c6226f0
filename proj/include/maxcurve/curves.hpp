#ifndef MAXCURVE_CURVES_HPP
#define MAXCURVE_CURVES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "maxcurve/finite_field.hpp"

// Projective plane curves over F_{q^2} from the families under study, plus
// genus bookkeeping. A curve is its homogeneous term list; the family tag
// records which constructor produced it and with which parameters.

namespace maxcurve {

enum class CurveFamily { hermitian, hurwitz, generalized_hurwitz, fermat, custom };

const char* family_name(CurveFamily f);

struct CurveTerm {
    unsigned i = 0, j = 0, k = 0; // exponents of X, Y, Z; i + j + k = degree
    FieldElement coeff;           // nonzero
};

// Normalized homogeneous coordinates: first nonzero coordinate equals 1.
struct ProjectivePoint {
    FieldElement x, y, z;
    bool operator==(const ProjectivePoint& rhs) const {
        return x == rhs.x && y == rhs.y && z == rhs.z;
    }
};

ProjectivePoint make_point(const FieldElement& x, const FieldElement& y, const FieldElement& z);
std::string point_str(const ProjectivePoint& pt);

struct PlaneCurve {
    CurveFamily family = CurveFamily::custom;
    // Family parameters: hurwitz uses n; generalized_hurwitz n and l;
    // fermat m; hermitian reads q off the field.
    std::uint64_t n = 0, l = 0, m = 0;
    unsigned degree = 0;
    Field field;
    std::vector<CurveTerm> terms;
};

// X^{q+1} + Y^{q+1} + Z^{q+1}, q from the field.
PlaneCurve make_hermitian(const Field& f);
// X^n Y + Y^n Z + Z^n X; requires n >= 2 and p not dividing n^2-n+1.
PlaneCurve make_hurwitz(std::uint64_t n, const Field& f);
// X^n Y^l + Y^n Z^l + Z^n X^l; requires n >= l >= 2 and p not dividing n^2-nl+l^2.
PlaneCurve make_generalized_hurwitz(std::uint64_t n, std::uint64_t l, const Field& f);
// X^m + Y^m + Z^m; requires m >= 1.
PlaneCurve make_fermat(std::uint64_t m, const Field& f);
// Arbitrary homogeneous term list; terms must be nonempty with equal total degree.
PlaneCurve make_custom(std::vector<CurveTerm> terms, const Field& f);

FieldElement evaluate(const PlaneCurve& c, const ProjectivePoint& pt);
bool is_on_curve(const PlaneCurve& c, const ProjectivePoint& pt);

// Walks P^2(F_{q^2}) once, charts (1:y:z), (0:1:z), (0:0:1), enumeration
// order within each chart.
void for_each_projective_point(const Field& f,
                               const std::function<void(const ProjectivePoint&)>& fn);

// Points where the curve and all three formal partials vanish.
// Throws BudgetExceeded when q^4 exceeds the budget.
std::vector<ProjectivePoint> singular_locus(const PlaneCurve& c,
                                            std::uint64_t budget = 1ull << 32);

std::uint64_t genus_nonsingular_plane(std::uint64_t d);
// Delta invariant of one unibranch singularity of the generalized Hurwitz
// curve; n >= l >= 2.
std::uint64_t delta_invariant(std::uint64_t n, std::uint64_t l);
std::uint64_t genus_generalized_hurwitz(std::uint64_t n, std::uint64_t l);
// Geometric genus by family; throws NoGenusFormula for custom curves.
std::uint64_t genus_of(const PlaneCurve& c);

// Canonical "family:params:p:k" text for named families; JSON for custom.
std::string curve_str(const PlaneCurve& c);
PlaneCurve parse_curve(const std::string& text,
                       std::uint64_t field_size_budget = Field::kDefaultSizeBudget);

} // namespace maxcurve

#endif
