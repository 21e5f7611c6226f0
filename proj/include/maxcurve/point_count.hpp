#ifndef MAXCURVE_POINT_COUNT_HPP
#define MAXCURVE_POINT_COUNT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "maxcurve/curves.hpp"

// Exhaustive rational point counting over F_{q^2}. Deliberately the dumbest
// correct thing: it is the independent oracle the number-theoretic criteria
// are checked against, so it must not share logic with them.

namespace maxcurve {

// Default cap on chart evaluations, roughly q^4.
constexpr std::uint64_t kDefaultPointBudget = 1ull << 32;

// Plane points of the curve over F_{q^2}, each point counted once.
// The chart split (1:y:z), (0:1:z), (0:0:1) partitions P^2; the first
// chart is divided by y across workers, so totals do not depend on the
// worker count. threads = 0 picks a machine default.
std::uint64_t count_points(const PlaneCurve& c,
                           std::uint64_t budget = kDefaultPointBudget,
                           unsigned threads = 0);

// Hasse-Weil upper bound 1 + q^2 + 2qg, attained exactly by maximal curves.
std::uint64_t expected_maximal_count(std::uint64_t q, std::uint64_t genus);

struct MaximalityVerdict {
    CurveFamily family = CurveFamily::custom;
    std::uint64_t n = 0, l = 0, m = 0; // family parameters, as applicable
    std::uint64_t p = 0;
    unsigned k = 0;
    std::uint64_t q = 0;
    std::uint64_t genus = 0;
    std::uint64_t observed = 0; // plane points, counted
    std::uint64_t expected = 0; // 1 + q^2 + 2qg
    bool maximal = false;       // observed == expected
    // Number-theoretic prediction, when the family has a criterion.
    std::optional<bool> criterion;
    // Whether plane count equals the count on the nonsingular model, with
    // the justification recorded in `note`.
    bool plane_equals_model = false;
    std::string note;
};

// Runs the count and the family criterion side by side. Throws
// NoGenusFormula for custom curves.
MaximalityVerdict verdict(const PlaneCurve& c,
                          std::uint64_t budget = kDefaultPointBudget,
                          unsigned threads = 0);

std::string verdict_json(const MaximalityVerdict& v);

} // namespace maxcurve

#endif
