#include <CLI11.hpp>
#include <json.hpp>

#include "fr3/battery.hpp"
#include "fr3/neargroup.hpp"
#include "fr3/search.hpp"
#include "fr3/spherical.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

using namespace fr3;
using json = nlohmann::ordered_json;

namespace {

// JSON numbers beyond 2^53 lose precision in common consumers; emit those as
// decimal strings.
json num(const Int& v) {
    static const Int cap = Int(1) << 53;
    if (v > cap || v < -cap) return to_string(v);
    return v.get_si();
}

json ring_json(const Rank3Ring& r) {
    return json{{"k", num(r.k)}, {"l", num(r.l)}, {"m", num(r.m)}, {"n", num(r.n)}};
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Eliminated: return "eliminated";
        case Status::NeedsCenter: return "needs_center";
        default: return "needs_spherical";
    }
}

int cmd_check(long k, long l, long m, long n, int verbosity) {
    Rank3Ring ring = make_rank3(k, l, m, n);
    Verdict v = run_battery(ring);
    std::cout << ring.str() << ": " << status_name(v.status);
    if (!v.eliminator.empty()) std::cout << " (" << v.eliminator << ")";
    std::cout << "\n";
    json j{{"ring", ring_json(ring)}, {"status", status_name(v.status)}};
    if (!v.eliminator.empty()) j["eliminator"] = v.eliminator;
    if (verbosity >= 1 && !v.witness.empty()) j["witness"] = v.witness;
    if (verbosity >= 2) {
        auto spec = codegree_spectrum(ring);
        j["b"] = num(spec.b);
        j["c"] = num(spec.c);
        j["kind"] = kind_name(spec.kind);
    }
    std::cout << j.dump() << "\n";
    return v.status == Status::Pass ? 0 : 1;
}

int cmd_spherical(long k, long l, long m, long n, int verbosity) {
    Rank3Ring ring = make_rank3(k, l, m, n);
    json j{{"ring", ring_json(ring)}};
    try {
        SphericalReport rep = eliminate_cubic(ring);
        std::cout << ring.str() << ": " << (rep.eliminated ? "eliminated" : "unresolved")
                  << " (" << rep.survivors.size() << " candidate pairs examined)\n";
        j["b"] = num(rep.b);
        j["c"] = num(rep.c);
        j["bound"] = num(rep.bound);
        j["eliminated"] = rep.eliminated;
        json cts = json::array();
        for (const auto& ct : rep.ctilde_values) cts.push_back(num(ct));
        j["ctilde_values"] = cts;
        json cands = json::array();
        for (const auto& cand : rep.survivors) {
            json cj{{"btilde", num(cand.btilde)},
                    {"ctilde", num(cand.ctilde)},
                    {"stage", cand.stage},
                    {"discarded", cand.discarded}};
            if (verbosity >= 1 && !cand.witness.empty()) cj["witness"] = cand.witness;
            cands.push_back(cj);
            if (verbosity >= 2)
                std::cout << "  (" << to_string(cand.btilde) << ", " << to_string(cand.ctilde)
                          << "): " << cand.stage << (cand.discarded ? " -> discarded" : "")
                          << (cand.witness.empty() ? "" : "  [" + cand.witness + "]") << "\n";
        }
        j["candidates"] = cands;
        std::cout << j.dump() << "\n";
        return rep.eliminated ? 0 : 1;
    } catch (const UnresolvedSurvivor& e) {
        std::cout << ring.str() << ": unresolved (" << e.what() << ")\n";
        j["eliminated"] = false;
        j["error"] = e.what();
        std::cout << j.dump() << "\n";
        return 1;
    }
}

struct NGVerdict {
    bool pass;
    std::string reason;
    NearClassifyResult classify;  // only meaningful for |G| = 2
};

NGVerdict neargroup_verdict(const GroupDescriptor& g, long n, long order_N) {
    NearGroupRing r = make_neargroup(g, n);
    if (!completeness_check(r)) return {false, "completeness"};
    if (theorem_A3_check(r) == NGCheck::Eliminated) return {false, "A3"};
    if (theorem_A1_check(r) == NGCheck::Eliminated) return {false, "A1"};
    if (g.order == 2) {
        auto c = theorem_near_classify(n, order_N);
        if (!c.pass) return {false, c.reason, c};
    }
    return {true, ""};
}

json neargroup_json(const GroupDescriptor& g, long n, const NGVerdict& v) {
    NearGroupRing r = make_neargroup(g, n);
    json j{{"group", g.name}, {"n", n}, {"verdict", v.pass ? "pass" : "eliminated"}};
    if (!v.pass) j["reason"] = v.reason;
    j["d_plus"] = r.d_plus.str();
    json cds = json::array();
    for (const auto& [f, mult] : neargroup_codegrees(r))
        cds.push_back(json{{"value", f.str()}, {"mult", mult}});
    j["codegrees"] = cds;
    if (v.reason == "roots_of_unity") {
        j["multiset"] = v.classify.multiset;
        j["order_N"] = v.classify.order_N;
        j["note"] =
            "multiset uniqueness across all root orders N relies on the classification "
            "of vanishing sums of roots of unity";
    }
    return j;
}

int cmd_neargroup(const std::string& spec, long n, long scan_n, bool scan, long order_N) {
    GroupDescriptor g = parse_group_spec(spec);
    if (scan) {
        for (long i = 0; i <= scan_n; ++i) {
            auto v = neargroup_verdict(g, i, order_N);
            std::cout << "K(" << g.name << "," << i << "): "
                      << (v.pass ? "pass" : "eliminated (" + v.reason + ")") << "\n";
            std::cout << neargroup_json(g, i, v).dump() << "\n";
        }
        return 0;
    }
    auto v = neargroup_verdict(g, n, order_N);
    std::cout << "K(" << g.name << "," << n << "): "
              << (v.pass ? "pass" : "eliminated (" + v.reason + ")") << "\n";
    std::cout << neargroup_json(g, n, v).dump() << "\n";
    return v.pass ? 0 : 1;
}

std::string checkpoint_path(const SearchConfig& cfg) {
    const char* dir = std::getenv("FR3_CHECKPOINT_DIR");
    std::string base = dir ? dir : ".";
    return base + "/fr3_search_" + std::to_string(cfg.max_k) + "_" +
           std::to_string(cfg.jobs) + ".ckpt.json";
}

int cmd_search(SearchConfig cfg) {
    cfg.checkpoint = checkpoint_path(cfg);
    auto res = run_table_search(cfg);
    std::cerr << "search: " << res.rows.size() << " rows (l >= 1), " << res.l0.size()
              << " l = 0 family rows";
    if (!cfg.out.empty()) std::cerr << " -> " << cfg.out;
    std::cerr << "\n";
    if (cfg.out.empty())
        for (const auto& row : res.rows) std::cout << table_row_json(row) << "\n";
    return 0;
}

int cmd_table(SearchConfig cfg) {
    cfg.checkpoint.clear();
    cfg.out.clear();
    auto res = run_table_search(cfg);
    std::cout << "rings with l >= 1 passing cyclotomic + d-number, k <= " << cfg.max_k << ":\n";
    for (const auto& row : res.rows)
        std::cout << "  " << row.ring.str() << "  b=" << to_string(row.b)
                  << " c=" << to_string(row.c) << "  " << row.verdict << "\n";
    std::cout << "l = 0 family K(1,0,m,0), m <= " << cfg.max_m << ":\n";
    for (const auto& row : res.l0)
        std::cout << "  " << row.ring.str() << "  " << row.verdict << "\n";
    return 0;
}

int cmd_classify(long max_m, long max_k) {
    auto rep = classify_rank3(max_m, max_k);
    for (const auto& e : rep.entries)
        if (e.status != Status::Pass)
            std::cout << "  " << e.name << ": " << status_name(e.status)
                      << (e.eliminator.empty() ? "" : " (" + e.eliminator + ")") << "\n";
    std::cout << "survivors:\n";
    json surv = json::array();
    for (const auto& s : rep.survivors) {
        std::cout << "  " << s << "\n";
        surv.push_back(s);
    }
    std::cout << json{{"survivors", surv}}.dump() << "\n";
    return 0;
}

int cmd_selftest() {
    int failed = 0;
    auto suite = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failed;
    };

    bool magic_ok = true;
    try {
        // compute_bc cross-checks the magic identity against the trace and
        // determinant of the codegree matrix on every ring.
        enumerate_solutions(40, [](const Rank3Ring& r) { compute_bc(r); });
    } catch (const std::exception&) {
        magic_ok = false;
    }
    suite("magic-identity", magic_ok);

    auto b50 = enumerate_b50();
    int pass_both = 0;
    for (const auto& r : b50.positive) {
        auto s = codegree_spectrum(r);
        if (cyclotomic_test(s) && dnumber_test(s)) ++pass_both;
    }
    suite("b50-enumeration", b50.positive.size() == 11 && pass_both == 2);

    suite("battery-known-verdicts",
          run_battery(make_rank3(1, 1, 1, 0)).status == Status::Pass &&
              run_battery(make_rank3(2, 1, 2, 1)).eliminator == "center_obstruction" &&
              run_battery(make_rank3(29, 13, 62, 7)).status == Status::NeedsSpherical);

    bool near_ok = true;
    for (long m = 0; m <= 16; ++m) near_ok = near_ok && (theorem_near_classify(m).pass == (m <= 2));
    suite("near-group-classify", near_ok);

    bool sph_ok = false;
    try {
        sph_ok = eliminate_cubic(make_rank3(29, 13, 62, 7)).eliminated;
    } catch (const std::exception&) {
    }
    suite("spherical-pipeline", sph_ok);

    auto rep = classify_rank3(8, 3);
    suite("classify-rank3",
          rep.survivors == std::vector<std::string>{"K(Z/3Z)", "K(1,0,0,0)", "K(1,0,1,0)",
                                                    "K(1,0,2,0)", "K(1,1,1,0)"});

    std::cout << (failed == 0 ? "selftest: all suites passed\n"
                              : "selftest: " + std::to_string(failed) + " suite(s) failed\n");
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fr3: categorifiability obstructions for rank-3 fusion rings"};
    app.require_subcommand(1);
    app.fallthrough();
    int verbosity = 1;
    app.add_option("-v,--verbosity", verbosity, "0 verdict-only, 1 witness, 2 full trace");

    long k = 0, l = 0, m = 0, n = 0;
    auto* check = app.add_subcommand("check", "run the test battery on K(k,l,m,n)");
    check->fallthrough();
    check->add_option("k", k)->required();
    check->add_option("l", l)->required();
    check->add_option("m", m)->required();
    check->add_option("n", n)->required();

    auto* sph = app.add_subcommand("spherical", "sphericalization pipeline for a cubic ring");
    sph->fallthrough();
    sph->add_option("k", k)->required();
    sph->add_option("l", l)->required();
    sph->add_option("m", m)->required();
    sph->add_option("n", n)->required();

    SearchConfig cfg;
    auto* search = app.add_subcommand("search", "exhaustive sieved search, JSONL output");
    search->add_option("--max-k", cfg.max_k);
    search->add_option("--jobs", cfg.jobs);
    search->add_option("--max-m", cfg.max_m);
    search->add_option("--out", cfg.out);
    search->add_flag("--resume", cfg.resume);

    auto* table = app.add_subcommand("table", "human-readable search table");
    table->add_option("--max-k", cfg.max_k);
    table->add_option("--jobs", cfg.jobs);
    table->add_option("--max-m", cfg.max_m);

    std::string group_spec;
    long ng_n = 0, scan_n = 0, order_N = 24;
    auto* ng = app.add_subcommand("neargroup", "near-group ring checks");
    ng->add_option("--group", group_spec)->required();
    auto* opt_n = ng->add_option("--n", ng_n);
    auto* opt_scan = ng->add_option("--scan-n", scan_n);
    ng->add_option("--roots-order", order_N, "root-of-unity order for the m=4 search");
    opt_n->excludes(opt_scan);

    long max_m = 64, max_k = 3;
    auto* cls = app.add_subcommand("classify-rank3", "full rank-3 classification");
    cls->add_option("--max-m", max_m);
    cls->add_option("--max-k", max_k);

    app.add_subcommand("selftest", "run the embedded property suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(k, l, m, n, verbosity);
        if (sph->parsed()) return cmd_spherical(k, l, m, n, verbosity);
        if (search->parsed()) return cmd_search(cfg);
        if (table->parsed()) return cmd_table(cfg);
        if (ng->parsed()) {
            if (!*opt_n && !*opt_scan) {
                std::cerr << "neargroup: one of --n or --scan-n is required\n";
                return 2;
            }
            return cmd_neargroup(group_spec, ng_n, scan_n, static_cast<bool>(*opt_scan), order_N);
        }
        if (app.get_subcommand("classify-rank3")->parsed()) return cmd_classify(max_m, max_k);
        if (app.get_subcommand("selftest")->parsed()) return cmd_selftest();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
