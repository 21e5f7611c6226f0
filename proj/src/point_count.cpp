#include "maxcurve/point_count.hpp"

#include <numeric>
#include <thread>
#include <vector>

#include <json.hpp>

#include "maxcurve/criteria.hpp"

namespace maxcurve {

namespace {

unsigned pick_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return hw > 8 ? 8 : hw;
}

} // namespace

std::uint64_t count_points(const PlaneCurve& c, std::uint64_t budget, unsigned threads) {
    const std::uint64_t size = c.field.size();
    if (static_cast<unsigned __int128>(size) * size > budget)
        throw BudgetExceeded("point count budget is q^4 evaluations");

    const auto all = c.field.elements();
    const auto& terms = c.terms;
    const std::size_t T = terms.size();

    // Chart (1:y:z): value(y, z) = sum_t coeff_t y^{j_t} z^{k_t}. Power
    // tables make the inner loop T multiplications and additions.
    std::vector<std::vector<FieldElement>> ypow(T), zpow(T);
    for (std::size_t t = 0; t < T; ++t) {
        ypow[t].reserve(size);
        zpow[t].reserve(size);
        for (const auto& e : all) {
            ypow[t].push_back(terms[t].coeff * e.pow(terms[t].j));
            zpow[t].push_back(e.pow(terms[t].k));
        }
    }

    const unsigned nworkers = pick_threads(threads);
    std::vector<std::uint64_t> partial(nworkers, 0);
    auto work = [&](unsigned w) {
        std::uint64_t local = 0;
        for (std::uint64_t iy = w; iy < size; iy += nworkers) {
            for (std::uint64_t iz = 0; iz < size; ++iz) {
                FieldElement acc = ypow[0][iy] * zpow[0][iz];
                for (std::size_t t = 1; t < T; ++t)
                    acc = acc + ypow[t][iy] * zpow[t][iz];
                if (acc.is_zero()) ++local;
            }
        }
        partial[w] = local;
    };
    if (nworkers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    std::uint64_t count = 0;
    for (auto x : partial) count += x;

    // Chart (0:1:z): only terms without X contribute.
    for (const auto& z : all) {
        FieldElement acc = c.field.zero();
        for (const auto& t : terms) {
            if (t.i != 0) continue;
            acc = acc + t.coeff * z.pow(t.k);
        }
        if (acc.is_zero()) ++count;
    }

    // Chart (0:0:1): the single point.
    FieldElement acc = c.field.zero();
    for (const auto& t : terms)
        if (t.i == 0 && t.j == 0) acc = acc + t.coeff;
    if (acc.is_zero()) ++count;
    return count;
}

std::uint64_t expected_maximal_count(std::uint64_t q, std::uint64_t genus) {
    const unsigned __int128 v =
        1 + static_cast<unsigned __int128>(q) * q + 2 * static_cast<unsigned __int128>(q) * genus;
    if (v > UINT64_MAX) throw BadParameters("count does not fit 64 bits");
    return static_cast<std::uint64_t>(v);
}

MaximalityVerdict verdict(const PlaneCurve& c, std::uint64_t budget, unsigned threads) {
    MaximalityVerdict v;
    v.family = c.family;
    v.n = c.n;
    v.l = c.l;
    v.m = c.m;
    v.p = c.field.p();
    v.k = c.field.k();
    v.q = c.field.q();
    v.genus = genus_of(c); // rejects custom curves before any counting
    v.observed = count_points(c, budget, threads);
    v.expected = expected_maximal_count(v.q, v.genus);
    v.maximal = (v.observed == v.expected);

    switch (c.family) {
    case CurveFamily::hermitian:
        v.criterion = true;
        v.plane_equals_model = true;
        v.note = "nonsingular; maximal over F_{q^2} for every q";
        break;
    case CurveFamily::hurwitz:
        v.criterion = hurwitz_criterion(c.n, v.p, v.k);
        v.plane_equals_model = true;
        v.note = "nonsingular plane model";
        break;
    case CurveFamily::fermat:
        v.criterion = fermat_criterion(c.m, v.p, v.k);
        v.plane_equals_model = true;
        v.note = "nonsingular plane model";
        break;
    case CurveFamily::generalized_hurwitz: {
        v.plane_equals_model = true;
        v.note = "singular only at the three coordinate points, each unibranch "
                 "with a rational branch, so plane and model counts agree";
        if (std::gcd(c.n, c.l) == 1) {
            const auto rep = generalized_criterion_report(c.n, c.l, v.p, v.k);
            v.criterion = rep.holds;
            if (!rep.q_prime)
                v.note += "; n^2-nl+l^2 not prime, criterion is one-directional";
        }
        break;
    }
    case CurveFamily::custom:
        break; // unreachable, genus_of threw
    }
    return v;
}

std::string verdict_json(const MaximalityVerdict& v) {
    nlohmann::json j;
    j["family"] = family_name(v.family);
    nlohmann::json params = nlohmann::json::object();
    if (v.family == CurveFamily::hurwitz) params["n"] = v.n;
    if (v.family == CurveFamily::generalized_hurwitz) {
        params["n"] = v.n;
        params["l"] = v.l;
    }
    if (v.family == CurveFamily::fermat) params["m"] = v.m;
    j["params"] = params;
    j["p"] = v.p;
    j["k"] = v.k;
    j["q"] = v.q;
    j["genus"] = v.genus;
    j["observed"] = v.observed;
    j["expected"] = v.expected;
    j["maximal"] = v.maximal;
    if (v.criterion)
        j["criterion"] = *v.criterion;
    else
        j["criterion"] = nullptr;
    j["plane_equals_model"] = v.plane_equals_model;
    j["note"] = v.note;
    return j.dump();
}

} // namespace maxcurve
