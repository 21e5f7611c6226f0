#include <doctest.h>

#include <json.hpp>

#include "maxcurve/covering.hpp"
#include "maxcurve/errors.hpp"

using namespace maxcurve;

TEST_CASE("fermat-to-hurwitz factorization identity, all affine pairs") {
    // x^n y + y^n + x = u^n v^-1 (u^m + v^m + 1) for every u and v != 0,
    // not only on the curve; n = 2, m = 3.
    const Field f25 = Field::create(5, 1);
    for (std::uint64_t iu = 0; iu < f25.size(); ++iu)
        for (std::uint64_t iv = 1; iv < f25.size(); ++iv) {
            const FieldElement u = f25.element(iu), v = f25.element(iv);
            const auto [x, y] = fermat_to_hurwitz_map(u, v, 2);
            const FieldElement lhs = x.pow(2) * y + y.pow(2) + x;
            const FieldElement rhs =
                u.pow(2) * v.inv() * (u.pow(3) + v.pow(3) + f25.one());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("fermat-to-generalized factorization identity, all affine pairs") {
    // x^n y^l + y^n + x^l = u^(nl) v^(-l^2) (u^Q + v^Q + 1); n = 3, l = 2, Q = 7.
    const Field f25 = Field::create(5, 1);
    for (std::uint64_t iu = 0; iu < f25.size(); ++iu)
        for (std::uint64_t iv = 1; iv < f25.size(); ++iv) {
            const FieldElement u = f25.element(iu), v = f25.element(iv);
            const auto [x, y] = fermat_to_generalized_map(u, v, 3, 2);
            const FieldElement lhs = x.pow(3) * y.pow(2) + y.pow(3) + x.pow(2);
            const FieldElement rhs =
                u.pow(6) * v.pow(-4) * (u.pow(7) + v.pow(7) + f25.one());
            CHECK(lhs == rhs);
        }
}

TEST_CASE("map domain restrictions") {
    const Field f25 = Field::create(5, 1);
    CHECK_THROWS_AS(fermat_to_hurwitz_map(f25.one(), f25.zero(), 2), UndefinedAtPoint);
    CHECK_THROWS_AS(fermat_to_generalized_map(f25.one(), f25.zero(), 3, 2), UndefinedAtPoint);

    const ProjectivePoint pt{f25.one(), f25.one(), f25.gen()};
    CHECK_THROWS_AS(hermitian_to_fermat_map(pt, 4), DivisibilityFails); // 4 does not divide 6
    const ProjectivePoint img = hermitian_to_fermat_map(pt, 3); // power 2
    CHECK(img.x == f25.one());
    CHECK(img.y == f25.one());
    CHECK(img.z == f25.gen() * f25.gen());
}

TEST_CASE("covering_map_for dispatch") {
    const Field f169 = Field::create(13, 1);
    const PlaneCurve fer = make_fermat(7, f169);
    const PlaneCurve hur = make_hurwitz(3, f169);
    const PlaneCurve gen = make_generalized_hurwitz(3, 2, f169);
    const PlaneCurve herm = make_hermitian(f169);
    CHECK(covering_map_for(fer, hur) == CoveringMap::fermat_to_hurwitz);
    CHECK(covering_map_for(fer, gen) == CoveringMap::fermat_to_generalized);
    CHECK(covering_map_for(herm, fer) == CoveringMap::hermitian_to_fermat);
    CHECK(covering_map_for(herm, hur) == CoveringMap::hermitian_to_hurwitz);
    CHECK_THROWS_AS(covering_map_for(hur, fer), IncompatibleParameters);
    CHECK_THROWS_AS(covering_map_for(gen, hur), IncompatibleParameters);
}

TEST_CASE("verify: fermat(3) onto hurwitz(2) over the field with 4 elements") {
    const Field f4 = Field::create(2, 1);
    const auto rep = verify_covering(make_fermat(3, f4), CoveringMap::fermat_to_hurwitz,
                                     make_hurwitz(2, f4));
    CHECK(rep.domain_points == 9);
    CHECK(rep.excluded == 6); // three points with y = 0, three with z = 0
    CHECK(rep.checked == 3);
    CHECK(rep.on_target == 3);
    CHECK(rep.ok);
    CHECK(rep.checked + rep.excluded == rep.domain_points);
}

TEST_CASE("verify: fermat(7) onto hurwitz(3) and generalized(3,2)") {
    const Field f169 = Field::create(13, 1);
    const PlaneCurve fer = make_fermat(7, f169);

    const auto hur = verify_covering(fer, CoveringMap::fermat_to_hurwitz,
                                     make_hurwitz(3, f169));
    CHECK(hur.domain_points == 560);
    CHECK(hur.excluded == 14); // seven points per coordinate line
    CHECK(hur.checked == 546);
    CHECK(hur.ok);

    const auto gen = verify_covering(fer, CoveringMap::fermat_to_generalized,
                                     make_generalized_hurwitz(3, 2, f169));
    CHECK(gen.domain_points == 560);
    CHECK(gen.excluded == 14);
    CHECK(gen.ok);
}

TEST_CASE("verify: hermitian onto fermat checks every point") {
    const Field f169 = Field::create(13, 1);
    const auto rep = verify_covering(make_hermitian(f169), CoveringMap::hermitian_to_fermat,
                                     make_fermat(7, f169));
    CHECK(rep.domain_points == 2198); // 13^3 + 1
    CHECK(rep.checked == 2198);
    CHECK(rep.excluded == 0);
    CHECK(rep.on_target == 2198);
    CHECK(rep.ok);
}

TEST_CASE("verify: hermitian onto hurwitz composes both legs") {
    const auto small = verify_covering(make_hermitian(Field::create(2, 1)),
                                       CoveringMap::hermitian_to_hurwitz,
                                       make_hurwitz(2, Field::create(2, 1)));
    CHECK(small.domain_points == 9);
    CHECK(small.checked + small.excluded == 9);
    CHECK(small.ok);

    const auto mid = verify_covering(make_hermitian(Field::create(5, 1)),
                                     CoveringMap::hermitian_to_hurwitz,
                                     make_hurwitz(2, Field::create(5, 1)));
    CHECK(mid.domain_points == 126);
    CHECK(mid.excluded == 12);
    CHECK(mid.ok);

    const auto big = verify_covering(make_hermitian(Field::create(13, 1)),
                                     CoveringMap::hermitian_to_hurwitz,
                                     make_hurwitz(3, Field::create(13, 1)));
    CHECK(big.domain_points == 2198);
    CHECK(big.excluded == 28);
    CHECK(big.checked == 2170);
    CHECK(big.ok);
}

TEST_CASE("verify rejects mismatched inputs") {
    const Field f169 = Field::create(13, 1);
    const Field f4 = Field::create(2, 1);
    CHECK_THROWS_AS(verify_covering(make_fermat(6, f169), CoveringMap::fermat_to_hurwitz,
                                    make_hurwitz(3, f169)),
                    IncompatibleParameters); // 6 != 3^2-3+1
    CHECK_THROWS_AS(verify_covering(make_fermat(7, f169), CoveringMap::fermat_to_hurwitz,
                                    make_hurwitz(2, f4)),
                    MixedFields);
    CHECK_THROWS_AS(verify_covering(make_hermitian(f169), CoveringMap::hermitian_to_fermat,
                                    make_fermat(5, f169)),
                    DivisibilityFails); // 5 does not divide 14
    CHECK_THROWS_AS(verify_covering(make_hermitian(f169), CoveringMap::hermitian_to_hurwitz,
                                    make_hurwitz(5, f169)),
                    DivisibilityFails); // 21 does not divide 14
    CHECK_THROWS_AS(verify_covering(make_fermat(7, f169), CoveringMap::fermat_to_hurwitz,
                                    make_hurwitz(3, f169), 100),
                    BudgetExceeded);
}

TEST_CASE("covering report json") {
    const Field f4 = Field::create(2, 1);
    const auto rep = verify_covering(make_fermat(3, f4), CoveringMap::fermat_to_hurwitz,
                                     make_hurwitz(2, f4));
    const auto j = nlohmann::json::parse(covering_json(rep));
    CHECK(j["map"] == "fermat_to_hurwitz");
    CHECK(j["domain"] == "fermat:3:2:1");
    CHECK(j["target"] == "hurwitz:2:2:1");
    CHECK(j["domain_points"] == 9);
    CHECK(j["checked"] == 3);
    CHECK(j["excluded"] == 6);
    CHECK(j["ok"] == true);
}
