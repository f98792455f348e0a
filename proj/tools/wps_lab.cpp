#include <cctype>
#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wps/curves.hpp"
#include "wps/exact.hpp"
#include "wps/hypersurface.hpp"
#include "wps/orbifold.hpp"
#include "wps/seifert.hpp"
#include "wps/weights.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string g_format = "json";

json big(const wps::BigInt& x) { return x.get_str(); }

json big_list(const std::vector<wps::BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

// exact value plus a 6-place decimal companion (advisory only)
void put_rat(json& obj, const std::string& key, const wps::Rational& q) {
    obj[key] = wps::rational_string(q);
    obj[key + "_decimal"] = wps::decimal_string(q);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) { parts.push_back(cur); cur.clear(); }
        else cur += c;
    }
    parts.push_back(cur);
    return parts;
}

wps::BigInt parse_big(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw wps::domain_error("malformed integer: '" + s + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw wps::domain_error("malformed integer: '" + s + "'");
    return wps::BigInt(s);
}

std::vector<wps::BigInt> parse_big_list(const std::string& csv) {
    std::vector<wps::BigInt> out;
    if (csv.empty()) return out;
    for (const auto& part : split(csv, ',')) out.push_back(parse_big(part));
    return out;
}

// --- TSV rendering: flatten the envelope to path<TAB>value lines ------------

bool all_scalar(const json& a) {
    for (const auto& x : a)
        if (x.is_object() || x.is_array()) return false;
    return true;
}

std::string scalar_str(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();  // numbers, booleans, null
}

void flatten(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        if (all_scalar(j)) {
            std::string joined;
            for (const auto& x : j) {
                if (!joined.empty()) joined += ",";
                joined += scalar_str(x);
            }
            out += prefix + "\t" + joined + "\n";
        } else {
            std::size_t i = 0;
            for (const auto& x : j) flatten(x, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out += prefix + "\t" + scalar_str(j) + "\n";
    }
}

void emit(const json& envelope) {
    if (g_format == "tsv") {
        std::string out;
        flatten(envelope, "", out);
        std::cout << out;
    } else {
        std::cout << envelope.dump(2) << "\n";
    }
}

json envelope(const std::string& command, json inputs, json results) {
    json env;
    env["command"] = command;
    env["inputs"] = std::move(inputs);
    env["results"] = std::move(results);
    return env;
}

// --- shared fragments --------------------------------------------------------

json weight_system_json(const wps::WeightSystem& ws) {
    json r;
    r["n"] = ws.size();
    r["W"] = big_list(ws.W);
    r["D"] = big(ws.D);
    r["wstar"] = big(ws.wstar);
    r["w"] = big_list(ws.w);
    r["d"] = big(ws.d);
    return r;
}

json reduced_conditions_json(const wps::ReducedConditionsReport& rc) {
    json r;
    r["gcd_W_D"] = big_list(rc.gcd_W_D);
    r["gcd_W_adjacent"] = big_list(rc.gcd_W_adj);
    r["gcd_w_d"] = big_list(rc.gcd_w_d);
    r["gcd_w_adjacent"] = big_list(rc.gcd_w_adj);
    r["unreduced_consistent"] = rc.unreduced_consistent;
    r["reduced_ok"] = rc.reduced_ok;
    json pairs = json::array();
    for (std::size_t k = 0; k < rc.nonadjacent_pairs.size(); ++k) {
        json p;
        p["i"] = rc.nonadjacent_pairs[k].first + 1;  // 1-based, as in w_1..w_n
        p["j"] = rc.nonadjacent_pairs[k].second + 1;
        p["gcd"] = big(rc.nonadjacent_gcds[k]);
        pairs.push_back(std::move(p));
    }
    r["nonadjacent_common_factors"] = std::move(pairs);
    return r;
}

json ball_match_json(const wps::BallMatch& m) {
    json j;
    j["family"] = m.family;
    j["n"] = big(m.n);
    j[m.family == 1 ? "a" : "d"] = big(m.witness);
    j["matched_q"] = big(m.matched_q);
    return j;
}

json defect_tuples_json(const std::vector<wps::DefectTuple>& ts) {
    json arr = json::array();
    for (const auto& t : ts) {
        json e;
        e["m"] = t.m;
        put_rat(e, "defect", t.defect);
        arr.push_back(std::move(e));
    }
    return arr;
}

// --- subcommand option holders ------------------------------------------------

struct TorsionSpec {
    std::vector<wps::TorsionSummand> summands;
};

TorsionSpec parse_torsion(const std::string& s) {
    TorsionSpec out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ',')) {
        const auto caret = part.find('^');
        const auto colon = part.find(':');
        if (caret == std::string::npos || colon == std::string::npos || colon < caret)
            throw wps::domain_error("malformed torsion entry '" + part +
                                    "' (expected p^i:count)");
        wps::TorsionSummand t;
        t.p = parse_big(part.substr(0, caret));
        t.i = static_cast<std::uint64_t>(
            std::stoull(part.substr(caret + 1, colon - caret - 1)));
        t.count = static_cast<std::uint64_t>(std::stoull(part.substr(colon + 1)));
        out.summands.push_back(std::move(t));
    }
    return out;
}

wps::ILValue parse_il(const std::string& s) {
    if (s == "inf" || s == "infinity" || s == "oo")
        return wps::ILValue{true, 0};
    wps::ILValue v;
    v.n = static_cast<std::uint64_t>(std::stoull(s));
    return v;
}

wps::IntMatrix parse_matrix(const std::string& rows) {
    const auto row_strs = split(rows, ';');
    std::vector<std::vector<wps::BigInt>> grid;
    for (const auto& r : row_strs) grid.push_back(parse_big_list(r));
    if (grid.empty() || grid[0].empty()) throw wps::domain_error("empty matrix");
    wps::IntMatrix m(grid.size(), grid[0].size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != m.cols) throw wps::domain_error("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = grid[i][j];
    }
    return m;
}

// ------------------------------------------------------------------------------

void register_weights(CLI::App& app) {
    auto csv = std::make_shared<std::string>();
    auto* sub = app.add_subcommand("weights", "Solve the cyclic weight system for -a a1,...,an");
    sub->fallthrough();
    sub->add_option("-a,--exponents", *csv, "Comma-separated exponents a_1,...,a_n")->required();
    sub->callback([csv] {
        const auto t = wps::make_exponent_tuple(parse_big_list(*csv));
        const auto ws = wps::solve_weights(t);
        json results = weight_system_json(ws);
        results["reduced_conditions"] = reduced_conditions_json(wps::check_reduced_conditions(ws));
        if (ws.size() == 4) results["n4_coprime"] = wps::n4_coprimality_condition(t);
        emit(envelope("weights", json{{"a", big_list(t.a)}}, std::move(results)));
    });
}

void register_survey(CLI::App& app) {
    auto* grp = app.add_subcommand("survey", "Density surveys over exponent tuples");
    grp->fallthrough();
    grp->require_subcommand(1);
    struct Opts {
        int n = 4;
        long long lo = 2, hi = 13;
        std::uint64_t samples = 0;
        std::uint64_t seed = 0;
        bool seeded = false;
        int jobs = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = grp->add_subcommand("density", "Fraction of tuples with wstar == 1");
    sub->fallthrough();
    sub->add_option("-n", o->n, "Tuple length")->required();
    sub->add_option("--lo", o->lo, "Smallest exponent (>= 2)")->required();
    sub->add_option("--hi", o->hi, "Largest exponent")->required();
    auto* samples_opt = sub->add_option("--samples", o->samples, "Sample count (omit for exhaustive)");
    sub->add_option("--seed", o->seed, "RNG seed (required with --samples)");
    sub->add_option("--jobs", o->jobs, "Worker threads (0 = default)");
    sub->callback([o, samples_opt] {
        wps::SurveyMode mode;
        if (samples_opt->count() > 0) {
            mode.exhaustive = false;
            mode.samples = o->samples;
            mode.seed = o->seed;
        }
        const auto stats = wps::density_survey(o->n, o->lo, o->hi, mode, o->jobs);
        json inputs{{"n", o->n}, {"lo", o->lo}, {"hi", o->hi},
                    {"mode", mode.exhaustive ? "exhaustive" : "sample"}};
        if (!mode.exhaustive) {
            inputs["samples"] = mode.samples;
            inputs["seed"] = mode.seed;
        }
        json results;
        results["total"] = stats.total;
        results["wstar_one"] = stats.wstar_one;
        put_rat(results, "fraction", stats.fraction);
        results["reference"] = json{{"euler_product", wps::DensityStats::kRefEulerProduct},
                                    {"odd_n", wps::DensityStats::kRefOddN},
                                    {"quoted_lower_bound", wps::DensityStats::kRefQuoted}};
        emit(envelope("survey density", std::move(inputs), std::move(results)));
    });
}

void register_surface(CLI::App& app) {
    struct Opts {
        std::string csv;
        bool contracted = false;
        int jobs = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("surface", "Invariants of the hypersurface H(a_1,...,a_n)");
    sub->fallthrough();
    sub->add_option("-a,--exponents", o->csv, "Comma-separated exponents")->required();
    sub->add_flag("--contracted", o->contracted, "Also contract the two rational curves (n = 4)");
    sub->add_option("--jobs", o->jobs, "Worker threads for the Milnor-Orlik sum");
    sub->callback([o] {
        const auto t = wps::make_exponent_tuple(parse_big_list(o->csv));
        const auto ws = wps::solve_weights(t);
        const auto cd = wps::canonical_data(ws);
        const auto ks = wps::k_self_intersection(ws);
        const auto rank = wps::milnor_orlik_rank(ws.w, ws.d, o->jobs);
        const auto closed = wps::middle_rank_closed_form(ws);
        if (rank != closed)
            throw wps::consistency_error("Milnor-Orlik rank " + rank.get_str() +
                                         " disagrees with closed form " + closed.get_str());
        json results;
        results["weights"] = weight_system_json(ws);
        results["canonical"] = json{{"degree", big(cd.degree)},
                                    {"degree_sign", cd.degree_sign},
                                    {"ample_sufficient", cd.ample_sufficient}};
        put_rat(results, "k_self_intersection", ks);
        results["link_middle_rank"] = big(rank);
        results["middle_rank_closed_form"] = big(closed);
        results["rank_routes_agree"] = true;
        if (o->contracted) {
            const auto cs = wps::contracted_surface(ws);
            json c;
            put_rat(c, "KC1", cs.KC1);
            put_rat(c, "KC2", cs.KC2);
            put_rat(c, "C1_sq", cs.C1sq);
            put_rat(c, "C2_sq", cs.C2sq);
            put_rat(c, "K_sq", cs.K_sq);
            put_rat(c, "K_star_sq", cs.K_star_sq);
            results["contracted"] = std::move(c);
        }
        emit(envelope("surface", json{{"a", big_list(t.a)}, {"contracted", o->contracted}},
                      std::move(results)));
    });
}

void register_betti(CLI::App& app) {
    auto csv = std::make_shared<std::string>();
    auto* sub = app.add_subcommand("betti", "Rational homology profile (wstar == 1 only)");
    sub->fallthrough();
    sub->add_option("-a,--exponents", *csv, "Comma-separated exponents")->required();
    sub->callback([csv] {
        const auto t = wps::make_exponent_tuple(parse_big_list(*csv));
        const auto ws = wps::solve_weights(t);
        const auto betti = wps::homology_profile(ws);
        int sum = 0;
        for (int b : betti) sum += b;
        json results{{"wstar", big(ws.wstar)}, {"betti", betti}, {"betti_sum", sum}};
        emit(envelope("betti", json{{"a", big_list(t.a)}}, std::move(results)));
    });
}

void register_curve(CLI::App& app) {
    auto* grp = app.add_subcommand("curve", "n = 3 curve geometry");
    grp->fallthrough();
    grp->require_subcommand(1);
    {
        struct Opts { std::string wcsv; std::string d; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("classify", "Classify a quasi-smooth rational curve");
        sub->fallthrough();
        sub->add_option("-w,--weights", o->wcsv, "Plane weights u,v,w")->required();
        sub->add_option("-d,--degree", o->d, "Curve degree")->required();
        sub->callback([o] {
            const auto wl = parse_big_list(o->wcsv);
            if (wl.size() != 3) throw wps::domain_error("classify needs exactly 3 weights");
            const std::array<wps::BigInt, 3> weights{wl[0], wl[1], wl[2]};
            const wps::BigInt d = parse_big(o->d);
            const auto c = wps::classify_qsrc(weights, d);
            json results;
            switch (c.kind) {
                case wps::CurveClass::coordinate_line:
                    results["kind"] = "CoordinateLine";
                    results["axis"] = c.axis + 1;  // 1-based coordinate index
                    break;
                case wps::CurveClass::conic_type:
                    results["kind"] = "ConicType";
                    results["pair"] = json::array({c.pair[0] + 1, c.pair[1] + 1});
                    break;
                case wps::CurveClass::cyclic_cusp:
                    results["kind"] = "CyclicCusp";
                    results["abc"] = big_list({c.abc[0], c.abc[1], c.abc[2]});
                    break;
                case wps::CurveClass::unknown:
                    results["kind"] = "Unknown";
                    break;
            }
            emit(envelope("curve classify",
                          json{{"weights", big_list(wl)}, {"d", big(d)}}, std::move(results)));
        });
    }
    {
        auto csv = std::make_shared<std::string>();
        auto* sub = grp->add_subcommand("genus", "Genus and Kodaira-type degree of H(a1,a2,a3)");
        sub->fallthrough();
        sub->add_option("-a,--exponents", *csv, "Exponents a1,a2,a3")->required();
        sub->callback([csv] {
            const auto t = wps::make_exponent_tuple(parse_big_list(*csv));
            const auto ws = wps::solve_weights(t);
            const auto g = wps::genus_n3(ws);
            const auto kd = wps::kodaira_degree_n3(t);
            json results;
            results["weights"] = weight_system_json(ws);
            results["genus"] = big(g);
            results["kodaira_degree"] = big(kd);
            results["kodaira_sign"] = sgn(kd);
            emit(envelope("curve genus", json{{"a", big_list(t.a)}}, std::move(results)));
        });
    }
    {
        struct Opts { std::string genus; std::string orders; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("adjunction", "Orbifold adjunction value 2g-2+sum(1-1/m)");
        sub->fallthrough();
        sub->add_option("-g,--genus", o->genus, "Genus (>= 0)")->required();
        sub->add_option("-m,--orders", o->orders, "Comma-separated orders (may be empty)");
        sub->callback([o] {
            const auto g = parse_big(o->genus);
            const auto m = parse_big_list(o->orders);
            json results;
            put_rat(results, "value", wps::adjunction_value(g, m));
            emit(envelope("curve adjunction", json{{"genus", big(g)}, {"orders", big_list(m)}},
                          std::move(results)));
        });
    }
    {
        struct Opts { long long bound = 50; int jobs = 0; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("excluded", "Search the excluded rational-curve family");
        sub->fallthrough();
        sub->add_option("--bound", o->bound, "Search bound for u,v,w,m")->required();
        sub->add_option("--jobs", o->jobs, "Worker threads");
        sub->callback([o] {
            const auto r = wps::verify_excluded_family(o->bound, o->jobs);
            json sols = json::array();
            for (const auto& s : r.solutions)
                sols.push_back(json{{"u", s[0]}, {"v", s[1]}, {"w", s[2]}, {"m", s[3]}});
            json results{{"searched", r.searched},
                         {"solutions", std::move(sols)},
                         {"empty", r.solutions.empty()}};
            emit(envelope("curve excluded", json{{"bound", o->bound}}, std::move(results)));
        });
    }
}

void register_lens(CLI::App& app) {
    auto* grp = app.add_subcommand("lens", "Lens-space arithmetic");
    grp->fallthrough();
    grp->require_subcommand(1);
    {
        struct Opts { std::string p, q; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("normalize", "Canonical form under q -> q^{-1}, q -> p-q");
        sub->fallthrough();
        sub->add_option("p", o->p, "Order of the fundamental group")->required();
        sub->add_option("q", o->q, "Twisting parameter")->required();
        sub->callback([o] {
            const auto p = parse_big(o->p), q = parse_big(o->q);
            const auto orbit = wps::lens_orbit(p, q);
            const auto canon = wps::lens_normalize(p, q);
            json results{{"orbit", big_list(orbit)},
                         {"p", big(canon.p)},
                         {"q", big(canon.q)}};
            emit(envelope("lens normalize", json{{"p", big(p)}, {"q", big(q)}},
                          std::move(results)));
        });
    }
    {
        struct Opts { std::string p, q; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("ball", "Rational-homology-ball membership (Lisca list)");
        sub->fallthrough();
        sub->add_option("p", o->p, "Order of the fundamental group")->required();
        sub->add_option("q", o->q, "Twisting parameter")->required();
        sub->callback([o] {
            const auto p = parse_big(o->p), q = parse_big(o->q);
            const auto m = wps::rational_ball_membership(p, q);
            json results;
            results["in_list"] = m.in_list;
            if (m.in_list) {
                results["primary"] = ball_match_json(m.primary);
                json all = json::array();
                for (const auto& x : m.matches) all.push_back(ball_match_json(x));
                results["matches"] = std::move(all);
            } else {
                results["reason"] = m.reason;
            }
            emit(envelope("lens ball", json{{"p", big(p)}, {"q", big(q)}}, std::move(results)));
        });
    }
    {
        struct Opts { std::string a, b; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("from-conic",
                                        "Lens space bounding the conic-curve neighborhood");
        sub->fallthrough();
        sub->add_option("a", o->a, "First parameter (>= 1)")->required();
        sub->add_option("b", o->b, "Second parameter (>= 1, coprime to a)")->required();
        sub->callback([o] {
            const auto a = parse_big(o->a), b = parse_big(o->b);
            const auto c = wps::lens_from_conic(a, b);
            json results{{"p", big(c.lens.p)},
                         {"q", big(c.lens.q)},
                         {"a_prime", big(c.a_prime)},
                         {"b_prime", big(c.b_prime)}};
            emit(envelope("lens from-conic", json{{"a", big(a)}, {"b", big(b)}},
                          std::move(results)));
        });
    }
}

void register_family(CLI::App& app) {
    auto* grp = app.add_subcommand("family", "Explicit H-cobordism example families");
    grp->fallthrough();
    grp->require_subcommand(1);
    {
        auto u = std::make_shared<std::string>();
        auto* sub = grp->add_subcommand("wahl", "Wahl's (3,3,3,m) family");
        sub->fallthrough();
        sub->add_option("u", *u, "Family parameter (>= 2)")->required();
        sub->callback([u] {
            const auto f = wps::wahl_family(parse_big(*u));
            json results;
            results["m"] = big(f.m);
            results["n"] = big(f.n);
            results["r"] = big(f.r);
            results["a"] = big(f.a);
            results["group_order"] = big(f.group_order);
            results["milnor_number"] = big(f.milnor_number);
            results["fiber_euler"] = big(f.fiber_euler);
            results["multiplicities"] = big_list({f.multiplicities[0], f.multiplicities[1],
                                                  f.multiplicities[2], f.multiplicities[3]});
            put_rat(results, "defect", f.defect);
            results["identities"] = json{{"fiber_euler_equals_group_order", true},
                                         {"r_cubed_is_1_mod_m", true}};
            emit(envelope("family wahl", json{{"u", big(f.u)}}, std::move(results)));
        });
    }
    {
        struct Opts { std::string a, b, c; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("milnor-quotient", "Quasi-homogeneous cusp quotients");
        sub->fallthrough();
        sub->add_option("a", o->a, "Exponent a (>= 1)")->required();
        sub->add_option("b", o->b, "Exponent b (>= 1)")->required();
        sub->add_option("c", o->c, "Exponent c (>= 1)")->required();
        sub->callback([o] {
            const auto a = parse_big(o->a), b = parse_big(o->b), c = parse_big(o->c);
            const auto f = wps::milnor_quotient_family(a, b, c);
            json results;
            results["weights"] = big_list({f.weights[0], f.weights[1], f.weights[2]});
            results["multiplicities"] = big_list({f.multiplicities[0], f.multiplicities[1],
                                                  f.multiplicities[2]});
            results["fiber_euler"] = big(f.fiber_euler);
            results["group_order"] = big(f.group_order);
            results["quotient_euler"] = f.quotient_euler;
            emit(envelope("family milnor-quotient",
                          json{{"a", big(a)}, {"b", big(b)}, {"c", big(c)}}, std::move(results)));
        });
    }
}

void register_seifert(CLI::App& app) {
    auto* grp = app.add_subcommand("seifert", "Seifert-fibration arithmetic");
    grp->fallthrough();
    grp->require_subcommand(1);
    {
        struct Opts { std::string mult, ff; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("h1", "|H1| from multiplicities and zero-section FF");
        sub->fallthrough();
        sub->add_option("--mult", o->mult, "Comma-separated multiplicities (may be empty)");
        sub->add_option("--ff", o->ff, "Self-intersection FF as p/q")->required();
        sub->callback([o] {
            const auto mult = parse_big_list(o->mult);
            const auto ff = wps::parse_rational(o->ff);
            const auto h = wps::seifert_h1_order(mult, ff);
            json results{{"h1_order", big(h)}};
            emit(envelope("seifert h1",
                          json{{"multiplicities", big_list(mult)},
                               {"ff", wps::rational_string(ff)}},
                          std::move(results)));
        });
    }
    {
        auto csv = std::make_shared<std::string>();
        auto* sub = grp->add_subcommand("star-h1", "H1 of the star presentation <a_i | a_i^{r_i}, prod a_i>");
        sub->fallthrough();
        sub->add_option("-r,--orders", *csv, "Comma-separated orders r_i >= 2")->required();
        sub->callback([csv] {
            const auto r = parse_big_list(*csv);
            const auto snf = wps::star_presentation_h1(r);
            json results{{"diag", big_list(snf.diag)},
                         {"rank", snf.rank},
                         {"trivial", wps::star_h1_trivial(snf)}};
            emit(envelope("seifert star-h1", json{{"r", big_list(r)}}, std::move(results)));
        });
    }
}

void register_orbifold(CLI::App& app) {
    auto* grp = app.add_subcommand("orbifold", "Orbifold Euler characteristic and BMY checks");
    grp->fallthrough();
    grp->require_subcommand(1);
    struct Opts { std::string euler, orders, c1sq; };
    auto o = std::make_shared<Opts>();
    auto* sub = grp->add_subcommand("bmy", "Check the orbifold BMY-type inequalities");
    sub->fallthrough();
    sub->add_option("--euler", o->euler, "Topological Euler characteristic e(S)")->required();
    sub->add_option("--orders", o->orders, "Link group orders (may be empty)");
    auto* c1opt = sub->add_option("--c1sq", o->c1sq, "c1^2 as p/q (optional)");
    sub->callback([o, c1opt] {
        wps::OrbifoldSurfaceData data;
        data.euler = parse_big(o->euler);
        data.link_orders = parse_big_list(o->orders);
        if (c1opt->count() > 0) data.c1_squared = wps::parse_rational(o->c1sq);
        const auto r = wps::bmy_check(data);
        json results;
        put_rat(results, "e_orb", r.e_orb);
        put_rat(results, "defect", r.defect);
        put_rat(results, "c1_bound", r.c1_bound);
        json checks;
        checks["c1_le_3_eorb"] = r.c1_bound_holds ? json(*r.c1_bound_holds) : json(nullptr);
        checks["eorb_nonneg"] = r.eorb_nonneg;
        checks["defect_le_3"] = r.defect_le_3;
        checks["defect_lt_3"] = r.defect_lt_3;
        results["checks"] = std::move(checks);
        json inputs{{"euler", big(data.euler)}, {"orders", big_list(data.link_orders)}};
        if (data.c1_squared) inputs["c1sq"] = wps::rational_string(*data.c1_squared);
        emit(envelope("orbifold bmy", std::move(inputs), std::move(results)));
    });
}

void register_enumerate(CLI::App& app) {
    auto* grp = app.add_subcommand("enumerate", "Enumerate stabilizer-order tuples");
    grp->fallthrough();
    grp->require_subcommand(1);
    struct Opts {
        int k = 0, k_max = 0;
        long long max_m = 0;
        std::string threshold = "3";
        bool strict = false, coprime = false;
        int jobs = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = grp->add_subcommand("tuples", "Non-decreasing tuples with bounded defect");
    sub->fallthrough();
    sub->add_option("-k", o->k, "Tuple length")->required();
    auto* kmax = sub->add_option("--k-max", o->k_max, "Upper length for a range of lengths");
    sub->add_option("--max", o->max_m, "Largest entry M")->required();
    sub->add_option("--threshold", o->threshold, "Defect threshold as p/q");
    sub->add_flag("--strict", o->strict, "Use strict inequality defect < threshold");
    sub->add_flag("--coprime", o->coprime, "Require pairwise coprime entries");
    sub->add_option("--jobs", o->jobs, "Worker threads");
    sub->callback([o, kmax] {
        std::vector<int> lengths;
        const int hi = kmax->count() > 0 ? o->k_max : o->k;
        if (hi < o->k) throw wps::domain_error("--k-max must be >= -k");
        for (int k = o->k; k <= hi; ++k) lengths.push_back(k);
        const auto thr = wps::parse_rational(o->threshold);
        const auto res =
            wps::enumerate_defect_tuples(lengths, o->max_m, thr, o->strict, o->coprime, o->jobs);
        json results;
        results["count"] = res.tuples.size();
        results["tuples"] = defect_tuples_json(res.tuples);
        results["unbounded_prefixes"] = defect_tuples_json(res.unbounded_prefixes);
        json inputs{{"k", o->k},        {"k_max", hi},
                    {"max", o->max_m},  {"threshold", wps::rational_string(thr)},
                    {"strict", o->strict}, {"coprime", o->coprime}};
        emit(envelope("enumerate tuples", std::move(inputs), std::move(results)));
    });
}

void register_fivefold(CLI::App& app) {
    auto* grp = app.add_subcommand("fivefold", "Simply connected 5-manifold invariants");
    grp->fallthrough();
    grp->require_subcommand(1);
    struct Opts {
        std::uint64_t k = 0;
        std::string torsion, il = "0";
    };
    auto o = std::make_shared<Opts>();
    auto* sub = grp->add_subcommand("circle-action", "Decide existence of a smooth circle action");
    sub->fallthrough();
    sub->add_option("--k", o->k, "Free rank of H2")->required();
    sub->add_option("--torsion", o->torsion, "Summands p^i:count, comma-separated (may be empty)");
    sub->add_option("--i", o->il, "Barden invariant iL: 0, 1, 2, ..., or inf")->required();
    sub->callback([o] {
        wps::BardenInvariants inv;
        inv.k = o->k;
        inv.torsion = parse_torsion(o->torsion).summands;
        inv.iL = parse_il(o->il);
        const auto d = wps::circle_action_exists(inv);
        json results;
        results["exists"] = d.exists;
        results["conditions"] = json{{"prime_counts", d.cond_counts},
                                     {"il_value", d.cond_il_value},
                                     {"il_free_part", d.cond_il_free}};
        results["failures"] = d.failures;
        json inputs{{"k", o->k},
                    {"torsion", o->torsion},
                    {"iL", o->il}};
        emit(envelope("fivefold circle-action", std::move(inputs), std::move(results)));
    });
}

void register_exact(CLI::App& app) {
    auto* grp = app.add_subcommand("exact", "Exact integer arithmetic helpers");
    grp->fallthrough();
    grp->require_subcommand(1);
    {
        struct Opts { std::string a, b; };
        auto o = std::make_shared<Opts>();
        auto* sub = grp->add_subcommand("gcd", "Extended gcd with Bezout pair");
        sub->fallthrough();
        sub->add_option("a", o->a, "First integer")->required();
        sub->add_option("b", o->b, "Second integer")->required();
        sub->callback([o] {
            const auto a = parse_big(o->a), b = parse_big(o->b);
            const auto e = wps::ext_gcd(a, b);
            json results{{"g", big(e.g)}, {"s", big(e.s)}, {"t", big(e.t)}};
            emit(envelope("exact gcd", json{{"a", big(a)}, {"b", big(b)}}, std::move(results)));
        });
    }
    {
        auto n = std::make_shared<std::string>();
        auto* sub = grp->add_subcommand("factorize", "Prime factorization");
        sub->fallthrough();
        sub->add_option("n", *n, "Integer >= 1")->required();
        sub->callback([n] {
            const auto v = parse_big(*n);
            json factors = json::array();
            for (const auto& [p, e] : wps::factorize(v))
                factors.push_back(json{{"p", big(p)}, {"e", e}});
            emit(envelope("exact factorize", json{{"n", big(v)}},
                          json{{"factors", std::move(factors)}}));
        });
    }
    {
        auto rows = std::make_shared<std::string>();
        auto* sub = grp->add_subcommand("snf", "Smith normal form of an integer matrix");
        sub->fallthrough();
        sub->add_option("--rows", *rows, "Rows as 'a,b;c,d;...'")->required();
        sub->callback([rows] {
            const auto m = parse_matrix(*rows);
            const auto snf = wps::smith_normal_form(m);
            json results{{"diag", big_list(snf.diag)}, {"rank", snf.rank}};
            emit(envelope("exact snf", json{{"rows", *rows}}, std::move(results)));
        });
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wps-lab: exact invariants of weighted-projective hypersurfaces,\n"
                 "Seifert/lens-space arithmetic, and orbifold BMY-type inequality checks"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "Output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();

    register_weights(app);
    register_survey(app);
    register_surface(app);
    register_betti(app);
    register_curve(app);
    register_lens(app);
    register_family(app);
    register_seifert(app);
    register_orbifold(app);
    register_enumerate(app);
    register_fivefold(app);
    register_exact(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // argument errors are input-validation failures
    } catch (const wps::consistency_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const wps::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
