// Command-line front door: verify single curves, search parameter ranges,
// and emit the residue-class, bounds, and semigroup tables.
//
// Exit codes: 0 when every computed criterion agrees with its brute-force
// count (and coverings hold), 2 when the two routes disagree, 1 for usage
// or construction errors.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcurve/bounds.hpp"
#include "maxcurve/covering.hpp"
#include "maxcurve/criteria.hpp"
#include "maxcurve/curves.hpp"
#include "maxcurve/numeric.hpp"
#include "maxcurve/point_count.hpp"
#include "maxcurve/semigroup.hpp"

using namespace maxcurve;

namespace {

struct Output {
    std::string format = "json"; // json, csv, text
    std::string path;            // empty = stdout

    void emit(const std::string& s) const {
        if (path.empty()) {
            std::cout << s;
            if (s.empty() || s.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw BadParameters("cannot open output file " + path);
        f << s;
        if (s.empty() || s.back() != '\n') f << "\n";
    }
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("MAXCURVE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring unparsable MAXCURVE_BUDGET\n";
    }
    return kDefaultPointBudget;
}

std::string approx12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string verdict_text(const MaximalityVerdict& v) {
    std::string s;
    s += "family    " + std::string(family_name(v.family)) + "\n";
    if (v.family == CurveFamily::hurwitz) s += "n         " + std::to_string(v.n) + "\n";
    if (v.family == CurveFamily::generalized_hurwitz)
        s += "n, l      " + std::to_string(v.n) + ", " + std::to_string(v.l) + "\n";
    if (v.family == CurveFamily::fermat) s += "m         " + std::to_string(v.m) + "\n";
    s += "field     F_{q^2}, q = " + std::to_string(v.q) + " = " + std::to_string(v.p) + "^" +
         std::to_string(v.k) + "\n";
    s += "genus     " + std::to_string(v.genus) + "\n";
    s += "observed  " + std::to_string(v.observed) + "\n";
    s += "expected  " + std::to_string(v.expected) + " (1 + q^2 + 2qg)\n";
    s += "maximal   " + std::string(v.maximal ? "yes" : "no") + "\n";
    s += "criterion " + std::string(!v.criterion ? "n/a" : (*v.criterion ? "yes" : "no")) + "\n";
    if (!v.note.empty()) s += "note      " + v.note + "\n";
    return s;
}

PlaneCurve curve_from_flags(const std::string& family, std::optional<std::uint64_t> n,
                            std::optional<std::uint64_t> l, std::optional<std::uint64_t> m,
                            std::uint64_t p, unsigned k) {
    const Field f = Field::create(p, k);
    if (family == "hermitian") return make_hermitian(f);
    if (family == "hurwitz") {
        if (!n) throw BadParameters("hurwitz needs --n");
        return make_hurwitz(*n, f);
    }
    if (family == "generalized") {
        if (!n || !l) throw BadParameters("generalized needs --n and --l");
        return make_generalized_hurwitz(*n, *l, f);
    }
    if (family == "fermat") {
        if (!m) throw BadParameters("fermat needs --m");
        return make_fermat(*m, f);
    }
    throw BadParameters("unknown family '" + family + "'");
}

// ---- verify ----------------------------------------------------------

int cmd_verify(const std::string& family, std::optional<std::uint64_t> n,
               std::optional<std::uint64_t> l, std::optional<std::uint64_t> m, std::uint64_t p,
               unsigned k, std::uint64_t budget, const Output& out) {
    const PlaneCurve c = curve_from_flags(family, n, l, m, p, k);
    const MaximalityVerdict v = verdict(c, budget);
    out.emit(out.format == "text" ? verdict_text(v) : verdict_json(v));
    if (v.criterion && *v.criterion != v.maximal) return 2;
    return 0;
}

// ---- search ----------------------------------------------------------

struct SearchRow {
    std::uint64_t p = 0;
    unsigned k = 0;
    std::string q;
    bool criterion = false;
    bool verified = false;
    std::uint64_t observed = 0, expected = 0;
    bool maximal = false;
};

int cmd_search(const std::string& family, std::optional<std::uint64_t> n,
               std::optional<std::uint64_t> l, std::optional<std::uint64_t> m,
               std::uint64_t p_min, std::uint64_t p_max, unsigned k_max, std::uint64_t budget,
               const Output& out) {
    std::vector<SearchRow> rows;
    bool disagreement = false;
    for (std::uint64_t p = p_min; p <= p_max; ++p) {
        if (!is_prime_u64(p)) continue;
        for (unsigned k = 1; k <= k_max; ++k) {
            SearchRow row;
            row.p = p;
            row.k = k;
            row.q = exact_q(p, k).get_str();
            try {
                if (family == "hurwitz") {
                    if (!n) throw BadParameters("hurwitz needs --n");
                    row.criterion = hurwitz_criterion(*n, p, k);
                } else if (family == "generalized") {
                    if (!n || !l) throw BadParameters("generalized needs --n and --l");
                    row.criterion = generalized_criterion(*n, *l, p, k);
                } else if (family == "fermat") {
                    if (!m) throw BadParameters("fermat needs --m");
                    row.criterion = fermat_criterion(*m, p, k);
                } else if (family == "hermitian") {
                    row.criterion = true;
                } else {
                    throw BadParameters("unknown family '" + family + "'");
                }
            } catch (const CharacteristicDividesQ&) {
                continue; // p collides with the family invariant, no curve
            } catch (const CharacteristicDividesM&) {
                continue;
            }
            // Brute-force only when the full enumeration fits the budget.
            try {
                const PlaneCurve c = curve_from_flags(family, n, l, m, p, k);
                const MaximalityVerdict v = verdict(c, budget);
                row.verified = true;
                row.observed = v.observed;
                row.expected = v.expected;
                row.maximal = v.maximal;
                if (row.maximal != row.criterion) disagreement = true;
            } catch (const BudgetExceeded&) {
                row.verified = false;
            }
            rows.push_back(row);
        }
    }

    if (out.format == "csv") {
        std::string s = "p,k,q,criterion,verified,observed,expected,maximal\n";
        for (const auto& r : rows) {
            s += std::to_string(r.p) + "," + std::to_string(r.k) + "," + r.q + "," +
                 (r.criterion ? "true" : "false") + ",";
            if (r.verified)
                s += "true," + std::to_string(r.observed) + "," + std::to_string(r.expected) +
                     "," + (r.maximal ? "true" : "false");
            else
                s += "false,,,";
            s += "\n";
        }
        out.emit(s);
    } else if (out.format == "text") {
        std::string s;
        for (const auto& r : rows) {
            s += "p=" + std::to_string(r.p) + " k=" + std::to_string(r.k) + " q=" + r.q +
                 "  criterion=" + (r.criterion ? "yes" : "no ");
            if (r.verified)
                s += "  count=" + std::to_string(r.observed) + "/" +
                     std::to_string(r.expected) + (r.maximal ? "  maximal" : "");
            else
                s += "  (not counted: over budget)";
            s += "\n";
        }
        out.emit(s);
    } else {
        auto arr = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json j;
            j["p"] = r.p;
            j["k"] = r.k;
            j["q"] = r.q;
            j["criterion"] = r.criterion;
            j["verified"] = r.verified;
            if (r.verified) {
                j["observed"] = r.observed;
                j["expected"] = r.expected;
                j["maximal"] = r.maximal;
            }
            arr.push_back(j);
        }
        out.emit(arr.dump());
    }
    return disagreement ? 2 : 0;
}

// ---- bounds table ----------------------------------------------------

std::string bounds_table(std::uint64_t q_min, std::uint64_t q_max, const std::string& format) {
    struct Cell {
        std::string exact = "NA", approx = "";
    };
    auto surd_cell = [](const QuadraticSurd& s) {
        return Cell{s.str(), approx12(s.approx())};
    };

    nlohmann::json jrows = nlohmann::json::array();
    std::string csv =
        "q,p,v,d1,d1_approx,F,F_approx,d2,genus_excl_lo,genus_excl_hi,d3,d4,d4_approx,"
        "d4pq,d4pq_approx,d5,d5_approx,G,G_approx,admissible\n";
    std::string text;

    for (std::uint64_t q = q_min; q <= q_max; ++q) {
        const auto pv = prime_power_decompose(q);
        if (!pv) continue;
        const std::uint64_t p = pv->first;
        const unsigned v = pv->second;

        Cell cd1 = surd_cell(d1(q));
        const Rational F = F_ratio(q);
        Cell cF{F.get_str(), approx12(F.get_d())};
        std::string cd2 = "NA";
        if (q >= 3) cd2 = std::to_string(d2(q));
        const auto excl = genus_exclusion_interval(q);
        std::string cd3 = "NA";
        try {
            cd3 = std::to_string(d3(p, q));
        } catch (const NotApplicable&) {
        }
        Cell cd4, cd4pq, cd5, cG;
        try {
            cd4 = surd_cell(d4(q));
        } catch (const NotApplicable&) {
        }
        try {
            cd4pq = surd_cell(d4_prime_power(p, q));
        } catch (const NotApplicable&) {
        }
        try {
            cd5 = surd_cell(d5(p, q));
        } catch (const NotApplicable&) {
        }
        try {
            cG = surd_cell(G_bound(q));
        } catch (const NotApplicable&) {
        } catch (const NegativeDiscriminant&) {
        }
        const auto adm = admissible_degrees(p, q);
        std::string adm_s;
        for (std::size_t i = 0; i < adm.size(); ++i) {
            if (i) adm_s += ";";
            adm_s += std::to_string(adm[i]);
        }

        if (format == "json") {
            nlohmann::json j;
            j["q"] = q;
            j["p"] = p;
            j["v"] = v;
            j["d1"] = {{"exact", cd1.exact}, {"approx", cd1.approx}};
            j["F"] = {{"exact", cF.exact}, {"approx", cF.approx}};
            j["d2"] = cd2;
            j["genus_exclusion"] = {excl.first, excl.second};
            j["d3"] = cd3;
            j["d4"] = {{"exact", cd4.exact}, {"approx", cd4.approx}};
            j["d4pq"] = {{"exact", cd4pq.exact}, {"approx", cd4pq.approx}};
            j["d5"] = {{"exact", cd5.exact}, {"approx", cd5.approx}};
            j["G"] = {{"exact", cG.exact}, {"approx", cG.approx}};
            j["admissible"] = adm;
            jrows.push_back(j);
        } else if (format == "csv") {
            csv += std::to_string(q) + "," + std::to_string(p) + "," + std::to_string(v) + "," +
                   cd1.exact + "," + cd1.approx + "," + cF.exact + "," + cF.approx + "," + cd2 +
                   "," + std::to_string(excl.first) + "," + std::to_string(excl.second) + "," +
                   cd3 + "," + cd4.exact + "," + cd4.approx + "," + cd4pq.exact + "," +
                   cd4pq.approx + "," + cd5.exact + "," + cd5.approx + "," + cG.exact + "," +
                   cG.approx + "," + adm_s + "\n";
        } else {
            text += "q=" + std::to_string(q) + " (p=" + std::to_string(p) +
                    ", v=" + std::to_string(v) + ")  d1~" + cd1.approx + "  F=" + cF.exact +
                    "  d2=" + cd2 + "  excl=(" + std::to_string(excl.first) + "," +
                    std::to_string(excl.second) + "]  d3=" + cd3 + "  d4~" +
                    (cd4.approx.empty() ? "NA" : cd4.approx) + "  d5~" +
                    (cd5.approx.empty() ? "NA" : cd5.approx) + "  G~" +
                    (cG.approx.empty() ? "NA" : cG.approx) + "  admissible={" + adm_s + "}\n";
        }
    }
    if (format == "json") return jrows.dump();
    if (format == "csv") return csv;
    return text;
}

// ---- tables ----------------------------------------------------------

int cmd_tables(const std::string& which, std::optional<std::uint64_t> m_opt,
               std::uint64_t n_min, std::uint64_t n_max, std::uint64_t q_min,
               std::uint64_t q_max, const Output& out) {
    if (which == "congruence") {
        std::vector<std::uint64_t> moduli;
        if (m_opt) {
            moduli.push_back(*m_opt);
        } else {
            for (std::uint64_t n = n_min; n <= n_max; ++n) moduli.push_back(n * n - n + 1);
        }
        if (out.format == "json") {
            auto arr = nlohmann::json::array();
            for (auto m : moduli)
                arr.push_back(nlohmann::json::parse(
                    congruence_table_json(admissible_exponent_residues(m))));
            out.emit(arr.dump());
        } else {
            std::string s = "m,w,residues\n";
            for (auto m : moduli) {
                const std::string one = congruence_table_csv(admissible_exponent_residues(m));
                s += one.substr(one.find('\n') + 1); // drop the per-table header
            }
            out.emit(s);
        }
        return 0;
    }
    if (which == "bounds") {
        out.emit(bounds_table(q_min, q_max, out.format));
        return 0;
    }
    if (which == "semigroup") {
        if (out.format == "json") {
            auto arr = nlohmann::json::array();
            for (std::uint64_t n = n_min; n <= n_max; ++n) {
                auto j = nlohmann::json::parse(semigroup_json(hurwitz_weierstrass_semigroup(n)));
                j["n"] = n;
                arr.push_back(j);
            }
            out.emit(arr.dump());
        } else {
            std::string s = "n,generators,genus,frobenius,gaps\n";
            for (std::uint64_t n = n_min; n <= n_max; ++n) {
                const auto sg = hurwitz_weierstrass_semigroup(n);
                auto join = [](const std::vector<std::uint64_t>& v) {
                    std::string r;
                    for (std::size_t i = 0; i < v.size(); ++i) {
                        if (i) r += ";";
                        r += std::to_string(v[i]);
                    }
                    return r;
                };
                s += std::to_string(n) + "," + join(sg.generators()) + "," +
                     std::to_string(sg.genus()) + "," + std::to_string(sg.frobenius_number()) +
                     "," + join(sg.gaps()) + "\n";
            }
            out.emit(s);
        }
        return 0;
    }
    throw BadParameters("--which must be congruence, bounds, or semigroup");
}

// ---- covering --------------------------------------------------------

int cmd_covering(const std::string& domain_s, const std::string& target_s, std::uint64_t budget,
                 const Output& out) {
    const PlaneCurve domain = parse_curve(domain_s);
    const PlaneCurve target = parse_curve(target_s);
    const CoveringMap map = covering_map_for(domain, target);
    const CoveringReport rep = verify_covering(domain, map, target, budget);
    if (out.format == "text") {
        std::string s = std::string(covering_map_name(rep.map)) + ": " + rep.domain + " -> " +
                        rep.target + "\n";
        s += "domain points " + std::to_string(rep.domain_points) + ", checked " +
             std::to_string(rep.checked) + ", excluded " + std::to_string(rep.excluded) +
             ", on target " + std::to_string(rep.on_target) + "\n";
        s += rep.ok ? "covering holds\n" : "COVERING FAILED\n";
        out.emit(s);
    } else {
        out.emit(covering_json(rep));
    }
    return rep.ok ? 0 : 2;
}

// ---- semigroup -------------------------------------------------------

int cmd_semigroup(std::uint64_t n, std::optional<std::uint64_t> l, const Output& out) {
    const NumericalSemigroup sg =
        l ? generalized_weierstrass_semigroup(n, *l) : hurwitz_weierstrass_semigroup(n);
    if (out.format == "text") {
        std::string s = "gaps (" + std::to_string(sg.genus()) + "): ";
        for (std::size_t i = 0; i < sg.gaps().size(); ++i) {
            if (i) s += " ";
            s += std::to_string(sg.gaps()[i]);
        }
        s += "\nfrobenius " + std::to_string(sg.frobenius_number()) + "\n";
        out.emit(s);
    } else {
        out.emit(semigroup_json(sg));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximality of plane curves over F_{q^2}: criteria, counts, tables"};
    app.require_subcommand(1);

    std::string family, format = "json", out_path, which = "congruence";
    std::string domain_s, target_s;
    std::optional<std::uint64_t> n_opt, l_opt, m_opt;
    std::uint64_t p = 0, p_min = 2, p_max = 13, n_min = 2, n_max = 4, q_min = 3, q_max = 64;
    unsigned k = 1, k_max = 3;
    std::uint64_t budget = default_budget();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv, or text")->capture_default_str();
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_option("--budget", budget, "point-enumeration budget, about q^4");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "count one curve and check the criterion");
    verify_cmd->add_option("--family", family)->required();
    verify_cmd->add_option("--n", n_opt);
    verify_cmd->add_option("--l", l_opt);
    verify_cmd->add_option("--m", m_opt);
    verify_cmd->add_option("--p", p)->required();
    verify_cmd->add_option("--k", k)->required();
    add_common(verify_cmd);

    CLI::App* search_cmd = app.add_subcommand("search", "sweep (p, k) ranges for maximal curves");
    search_cmd->add_option("--family", family)->required();
    search_cmd->add_option("--n", n_opt);
    search_cmd->add_option("--l", l_opt);
    search_cmd->add_option("--m", m_opt);
    search_cmd->add_option("--p-min", p_min)->capture_default_str();
    search_cmd->add_option("--p-max", p_max)->capture_default_str();
    search_cmd->add_option("--k-max", k_max)->capture_default_str();
    add_common(search_cmd);

    CLI::App* tables_cmd = app.add_subcommand("tables", "emit reference tables");
    tables_cmd->add_option("--which", which, "congruence, bounds, or semigroup")
        ->capture_default_str();
    tables_cmd->add_option("--m", m_opt, "single modulus for the congruence table");
    tables_cmd->add_option("--n-min", n_min)->capture_default_str();
    tables_cmd->add_option("--n-max", n_max)->capture_default_str();
    tables_cmd->add_option("--q-min", q_min)->capture_default_str();
    tables_cmd->add_option("--q-max", q_max)->capture_default_str();
    add_common(tables_cmd);

    CLI::App* bounds_cmd = app.add_subcommand("bounds-table", "degree-bound ladder per q");
    bounds_cmd->add_option("--q-min", q_min)->capture_default_str();
    bounds_cmd->add_option("--q-max", q_max)->capture_default_str();
    add_common(bounds_cmd);

    CLI::App* cover_cmd = app.add_subcommand("covering-check", "verify a covering map pointwise");
    cover_cmd->add_option("--domain", domain_s, "curve as family:params:p:k")->required();
    cover_cmd->add_option("--target", target_s, "curve as family:params:p:k")->required();
    add_common(cover_cmd);

    CLI::App* semi_cmd = app.add_subcommand("semigroup", "Weierstrass semigroup report");
    semi_cmd->add_option("--n", n_opt)->required();
    semi_cmd->add_option("--l", l_opt);
    add_common(semi_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (format != "json" && format != "csv" && format != "text") {
        std::cerr << "error: --format must be json, csv, or text\n";
        return 1;
    }
    const Output out{format, out_path};

    try {
        if (verify_cmd->parsed())
            return cmd_verify(family, n_opt, l_opt, m_opt, p, k, budget, out);
        if (search_cmd->parsed())
            return cmd_search(family, n_opt, l_opt, m_opt, p_min, p_max, k_max, budget, out);
        if (tables_cmd->parsed())
            return cmd_tables(which, m_opt, n_min, n_max, q_min, q_max, out);
        if (bounds_cmd->parsed()) {
            out.emit(bounds_table(q_min, q_max, format));
            return 0;
        }
        if (cover_cmd->parsed()) return cmd_covering(domain_s, target_s, budget, out);
        if (semi_cmd->parsed()) {
            if (!n_opt) throw BadParameters("semigroup needs --n");
            return cmd_semigroup(*n_opt, l_opt, out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
