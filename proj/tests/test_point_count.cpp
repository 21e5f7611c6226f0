#include <doctest.h>

#include <json.hpp>

#include "maxcurve/curves.hpp"
#include "maxcurve/errors.hpp"
#include "maxcurve/numeric.hpp"
#include "maxcurve/point_count.hpp"

using namespace maxcurve;

namespace {

// Independent route: walk every projective point and test membership.
std::uint64_t naive_count(const PlaneCurve& c) {
    std::uint64_t n = 0;
    for_each_projective_point(c.field, [&](const ProjectivePoint& pt) {
        if (is_on_curve(c, pt)) ++n;
    });
    return n;
}

} // namespace

TEST_CASE("chart count equals naive projective enumeration") {
    const Field f4 = Field::create(2, 1);
    const Field f9 = Field::create(3, 1);
    const Field f25 = Field::create(5, 1);
    const std::vector<PlaneCurve> curves = {
        make_hermitian(f4),
        make_hermitian(f9),
        make_hurwitz(2, f4),
        make_hurwitz(3, f4),
        make_hurwitz(3, f25),
        make_generalized_hurwitz(3, 2, f4),
        make_generalized_hurwitz(3, 2, f25),
        make_fermat(3, f4),
        make_fermat(2, f9),
        make_fermat(4, f9),
        make_custom({CurveTerm{2, 1, 0, f4.gen()}, CurveTerm{0, 3, 0, f4.one()},
                     CurveTerm{0, 0, 3, f4.gen()}},
                    f4),
        make_custom({CurveTerm{1, 0, 0, f9.one()}, CurveTerm{0, 1, 0, f9.one()},
                     CurveTerm{0, 0, 1, f9.one()}},
                    f9),
    };
    for (const auto& c : curves) CHECK(count_points(c) == naive_count(c));
}

TEST_CASE("a projective line has q^2 + 1 points") {
    const Field f9 = Field::create(3, 1);
    const PlaneCurve line = make_custom({CurveTerm{1, 0, 0, f9.one()},
                                         CurveTerm{0, 1, 0, f9.one()},
                                         CurveTerm{0, 0, 1, f9.one()}},
                                        f9);
    CHECK(count_points(line) == 10);
}

TEST_CASE("Hermitian curves attain q^3 + 1") {
    for (std::uint64_t q : {2, 3, 4, 5, 7}) {
        const auto pv = prime_power_decompose(q);
        REQUIRE(pv.has_value());
        const Field f = Field::create(pv->first, pv->second);
        CHECK(count_points(make_hermitian(f)) == q * q * q + 1);
    }
}

TEST_CASE("worker count does not change the total") {
    const PlaneCurve c = make_hermitian(Field::create(3, 1));
    const std::uint64_t ref = count_points(c, kDefaultPointBudget, 1);
    CHECK(count_points(c, kDefaultPointBudget, 2) == ref);
    CHECK(count_points(c, kDefaultPointBudget, 3) == ref);
    CHECK(count_points(c, kDefaultPointBudget, 8) == ref);
}

TEST_CASE("budget is enforced up front") {
    // Field size 9, so the chart walk needs 81 evaluations.
    const PlaneCurve c = make_hermitian(Field::create(3, 1));
    CHECK_THROWS_AS(count_points(c, 80), BudgetExceeded);
    CHECK(count_points(c, 81) == 28);
}

TEST_CASE("expected_maximal_count") {
    CHECK(expected_maximal_count(2, 1) == 9);
    CHECK(expected_maximal_count(3, 3) == 28);
    CHECK(expected_maximal_count(13, 3) == 248);
    CHECK(expected_maximal_count(13, 15) == 560);
    CHECK_THROWS_AS(expected_maximal_count(1ull << 32, 1ull << 31), BadParameters);
}

TEST_CASE("verdict: maximal cases") {
    const MaximalityVerdict hur = verdict(make_hurwitz(3, Field::create(13, 1)));
    CHECK(hur.q == 13);
    CHECK(hur.genus == 3);
    CHECK(hur.observed == 248);
    CHECK(hur.expected == 248);
    CHECK(hur.maximal);
    REQUIRE(hur.criterion.has_value());
    CHECK(*hur.criterion);

    const MaximalityVerdict fer = verdict(make_fermat(3, Field::create(2, 1)));
    CHECK(fer.observed == 9);
    CHECK(fer.maximal);
    CHECK(*fer.criterion);

    // Degree q+1 Fermat and Hermitian coincide; both routes see it.
    const MaximalityVerdict herm_as_fermat = verdict(make_fermat(4, Field::create(3, 1)));
    CHECK(herm_as_fermat.observed == 28);
    CHECK(herm_as_fermat.maximal);
    CHECK(*herm_as_fermat.criterion);
}

TEST_CASE("verdict: non-maximal cases agree with the criterion") {
    const MaximalityVerdict fer = verdict(make_fermat(4, Field::create(5, 1)));
    CHECK_FALSE(*fer.criterion); // 4 does not divide 6
    CHECK(fer.observed < fer.expected);
    CHECK_FALSE(fer.maximal);

    const MaximalityVerdict gen = verdict(make_generalized_hurwitz(3, 2, Field::create(5, 1)));
    REQUIRE(gen.criterion.has_value());
    CHECK_FALSE(*gen.criterion); // 7 does not divide 6
    CHECK(gen.observed < 56);
    CHECK(gen.expected == 56);
    CHECK_FALSE(gen.maximal);
}

TEST_CASE("verdict: generalized with gcd > 1 has no two-sided criterion") {
    const MaximalityVerdict v = verdict(make_generalized_hurwitz(4, 2, Field::create(5, 1)));
    CHECK_FALSE(v.criterion.has_value());
    CHECK(v.observed <= v.expected);
    const auto j = nlohmann::json::parse(verdict_json(v));
    CHECK(j["criterion"].is_null());
    CHECK(j["params"]["n"] == 4);
    CHECK(j["params"]["l"] == 2);
}

TEST_CASE("verdict rejects custom curves") {
    const Field f4 = Field::create(2, 1);
    const PlaneCurve line = make_custom({CurveTerm{1, 0, 0, f4.one()}}, f4);
    CHECK_THROWS_AS(verdict(line), NoGenusFormula);
}

TEST_CASE("verdict_json shape") {
    const auto j = nlohmann::json::parse(verdict_json(verdict(make_hurwitz(3, Field::create(13, 1)))));
    CHECK(j["family"] == "hurwitz");
    CHECK(j["params"]["n"] == 3);
    CHECK(j["p"] == 13);
    CHECK(j["k"] == 1);
    CHECK(j["q"] == 13);
    CHECK(j["genus"] == 3);
    CHECK(j["observed"] == 248);
    CHECK(j["expected"] == 248);
    CHECK(j["maximal"] == true);
    CHECK(j["criterion"] == true);
    CHECK(j["plane_equals_model"] == true);
}
