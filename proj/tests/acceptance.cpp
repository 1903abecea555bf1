// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criterion 8 exercises the CLI binary (path injected at build
// time) including kill-and-resume.

#include "fr3/battery.hpp"
#include "fr3/center.hpp"
#include "fr3/neargroup.hpp"
#include "fr3/search.hpp"
#include "fr3/spherical.hpp"
#include "random_rings.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace fr3;

namespace {

int failures = 0;

void run_criterion(int num, const std::string& name, bool (*fn)()) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d [%s]: %s (%.1fs)%s\n", num, name.c_str(),
                ok ? "PASS" : "FAIL", secs, err.empty() ? "" : ("  error: " + err).c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool expect(bool cond, const std::string& what) {
    if (!cond) std::printf("    failed: %s\n", what.c_str());
    return cond;
}

// 1. Table reproduction at max_k = 10000 on 4 cores.
bool crit_table() {
    SearchConfig cfg;
    cfg.max_k = 10000;
    cfg.jobs = 4;
    auto res = run_table_search(cfg);
    std::vector<Rank3Ring> want{
        make_rank3(1, 1, 1, 0),          make_rank3(29, 13, 62, 7),
        make_rank3(83, 77, 91, 70),      make_rank3(305, 179, 530, 99),
        make_rank3(409, 331, 137, 566),  make_rank3(1133, 169, 7624, 21),
        make_rank3(1373, 31, 60753, 2),  make_rank3(1493, 863, 2529, 530),
        make_rank3(2339, 323, 16906, 49), make_rank3(7579, 4063, 14136, 2179),
        make_rank3(8401, 5099, 13874, 3075), make_rank3(8621, 473, 157182, 23)};
    std::vector<Rank3Ring> got;
    for (const auto& row : res.rows) got.push_back(row.ring);
    bool ok = expect(got == want, "exact table set at max_k=10000");
    for (const auto& row : res.rows)
        ok &= expect(row.cyclotomic && row.dnumber && row.kind == Kind::Cubic,
                     "row passes both tests and is cubic");
    return ok;
}

// 2. Lemma-scale enumeration of the b < 50 regime.
bool crit_b50() {
    auto t0 = std::chrono::steady_clock::now();
    auto e = enumerate_b50();
    std::vector<Rank3Ring> survivors;
    for (const auto& r : e.positive) {
        auto s = codegree_spectrum(r);
        if (cyclotomic_test(s) && dnumber_test(s)) survivors.push_back(r);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return expect(e.positive.size() == 11, "11 canonical rings with 3>=k>=l>0") &
           expect((survivors ==
                   std::vector<Rank3Ring>{make_rank3(1, 1, 1, 0), make_rank3(2, 1, 2, 1)}),
                  "survivors exactly {K(1,1,1,0), K(2,1,2,1)}") &
           expect(secs < 1.0, "runtime < 1s");
}

// 3. K(2,1,2,1): exact Q(sqrt(3)) spectrum and the theta obstruction.
bool crit_2121() {
    auto ring = make_rank3(2, 1, 2, 1);
    auto spec = codegree_spectrum(ring);
    auto qs = quad_spectrum(spec);
    bool ok = expect(qs.has_value(), "quadratic spectrum exists");
    if (!ok) return false;
    // {12-6sqrt(3), 3, 12+6sqrt(3)}
    QuadElem lo{Int(12), Int(-6), Int(3)}, hi{Int(12), Int(6), Int(3)};
    ok &= expect((qs->f1 == lo), "f1 = 12-6sqrt(3)");
    ok &= expect((qs->f2 == QuadElem::rational(Int(3), Int(3))), "f2 = 3");
    ok &= expect((qs->f3 == hi), "f3 = 12+6sqrt(3)");
    ok &= expect(cyclotomic_test(spec) && dnumber_test(spec) && pseudo_unitary_test(spec),
                 "passes cyclotomic, d-number, pseudo-unitary");

    auto a = induction_unit_decomposition(ring);
    auto [fixed, total] = induction_object_profile(a, 2, {0, 0, 0});
    NFElem want_fixed =
        a.field->rational(Rat(3)) + a.field->rational(Rat(5)) * (a.d_X + a.d_Y);
    NFElem want_free = a.field->rational(Rat(4)) * (a.d_X + a.d_Y);
    ok &= expect((fixed == want_fixed), "fixed part 3+5d_X+5d_Y");
    ok &= expect((total - fixed == want_free), "free part 4d_X+4d_Y");
    ok &= expect(((fixed - (total - fixed)).sign() > 0), "fixed strictly exceeds free");
    ok &= expect(theta_obstruction(ring) == ThetaResult::Eliminated, "theta eliminates");
    return ok;
}

// Component-bound compatibility (either orientation) used in step 4.
bool compatible(const Rank3Ring& rr, const Rank3Ring& pivot) {
    auto fits = [](const Rank3Ring& a, const Rank3Ring& p) {
        auto comp = [](const Int& x, const Int& s) {
            Int ax = x < 0 ? Int(-x) : x;
            return ax <= s && (x - s) % 2 == 0;
        };
        return comp(a.k, p.k) && comp(a.l, p.l) && comp(a.m, p.m) && comp(a.n, p.n);
    };
    return fits(rr, pivot) || fits(rr.swapped(), pivot);
}

// 4. Spherical pipeline details for the four reference rings.
bool crit_spherical() {
    bool ok = true;
    auto r29 = make_rank3(29, 13, 62, 7);
    auto rep = eliminate_cubic(r29);
    ok &= expect(rep.eliminated, "(29,13,62,7) eliminated");
    ok &= expect(rep.survivors.size() == 2 && rep.survivors[0].btilde == 6930 &&
                     rep.survivors[1].btilde == 378 && rep.survivors[1].ctilde == 35721,
                 "survivors exactly {(6930,35721),(378,35721)}");
    auto recon = reconstruct_rings(378, 35721);
    std::vector<Rank3Ring> compat;
    for (const auto& rr : recon)
        if (compatible(rr, r29)) compat.push_back(rr);
    ok &= expect((compat == std::vector<Rank3Ring>{make_rank3(7, 1, 14, 5, true)}),
                 "b~=378 reconstructs only K(7,1,14,5) up to signs");
    ok &= expect(compute_bc(compat.empty() ? r29 : compat[0]).second == 10233,
                 "magic value 10233 != 35721");
    IntCubic p{Int(-6930), Int(35721), Int(-35721)};
    IntCubic pt{Int(-378), Int(35721), Int(-35721)};
    polyq::Poly cert{Rat(-294), Rat(881) / 3, Rat(-13) / 9};
    auto residue = polyq::mod(polyq::compose(p.poly(), cert), pt.poly());
    polyq::trim(residue);
    ok &= expect(residue.empty(), "certificate -(13/9)t^2+(881/3)t-294 verifies exactly");
    ok &= expect(cubic_field_iso(pt, p).isomorphic, "fields isomorphic");

    auto r83 = make_rank3(83, 77, 91, 70);
    auto rep83 = eliminate_cubic(r83);
    auto [b83, c83] = compute_bc(r83);
    ok &= expect(rep83.eliminated && rep83.survivors.size() == 2 &&
                     rep83.survivors[0].btilde == b83 && rep83.survivors[0].ctilde == c83 &&
                     rep83.survivors[1].btilde == 1026 && rep83.survivors[1].ctilde == 263169,
                 "(83,77,91,70) survivors exactly {(b,c),(1026,263169)}");
    IntCubic q{-b83, c83, -c83};
    IntCubic qt{Int(-1026), Int(263169), Int(-263169)};
    ok &= expect(!cubic_field_iso(q, qt).isomorphic,
                 "sorted-pairing sums certified non-integer");
    auto recon83 = reconstruct_rings(1026, 263169);
    ok &= expect(std::find(recon83.begin(), recon83.end(),
                           make_rank3(1, 1, 23, -22, true)) != recon83.end(),
                 "K(1,1,23,-22) among reconstructed rings");

    ok &= expect(enumerate_ctilde(make_rank3(54559, 41609, 71568, 31711)).size() == 16,
                 "16 ratio values for (54559,41609,71568,31711)");
    ok &= expect(enumerate_ctilde(make_rank3(95705, 14221, 641435, 2506)).size() == 3,
                 "3 ratio values for (95705,14221,641435,2506)");
    return ok;
}

// 5. Near-group theorems.
bool crit_neargroup() {
    bool ok = true;
    for (long m = 0; m <= 64; ++m) {
        auto r = theorem_near_classify(m);
        ok &= expect(r.pass == (m <= 2), "classify(m) pass iff m <= 2, m=" + std::to_string(m));
    }
    auto m4 = theorem_near_classify(4);
    ok &= expect(!m4.pass && m4.reason == "roots_of_unity" && m4.order_N == 24,
                 "m=4 eliminated via roots of unity at N=24");
    ok &= expect((m4.multiset ==
                  std::vector<long>{7, 7, 11, 11, 12, 12, 13, 13, 17, 17}),
                 "unique multiset 2 zeta^12 + 2 zeta^{+-7} + 2 zeta^{+-11}");
    auto m6 = theorem_near_classify(6);
    ok &= expect(!m6.pass && m6.reason == "inequality", "m=6 inequality");
    // Exact witness: (6^2/4+4)^2 = 169 < (6-2)^2 (6^2/4+2) = 176.
    ok &= expect(Int(13) * 13 == 169 && Int(16) * 11 == 176 && Int(169) < Int(176),
                 "169 < 176 witness");

    for (const auto& g : group_catalog())
        for (Int n = 0; n <= 2 * g.order; ++n) {
            auto r = make_neargroup(g, n);
            ok &= expect(completeness_check(r), "completeness for K(" + g.name + ")");
            theorem_A1_check(r);
            theorem_A3_check(r);
        }
    auto check = [](const std::string& gname, long n, bool pass) {
        auto r = make_neargroup(parse_group_spec(gname), n);
        bool elim = theorem_A1_check(r) == NGCheck::Eliminated ||
                    theorem_A3_check(r) == NGCheck::Eliminated;
        return elim != pass;
    };
    ok &= expect(check("c3", 1, false), "(Z/3,1) eliminated");
    ok &= expect(check("c4", 3, true), "(Z/4,3) pass");
    ok &= expect(check("c2xc2", 3, false), "(Z/2xZ/2,3) eliminated");
    ok &= expect(check("d8", 2, true), "(D8,2) pass");
    return ok;
}

// 6. Property suites over 10^4 seed-pinned random rings.
bool crit_properties() {
    auto rings = random_valid_rings(10000, 20260823);
    bool ok = expect(rings.size() == 10000, "10^4 rings generated");
    for (const auto& r : rings) {
        auto M = codegree_matrix(r);
        auto [b, c] = compute_bc(r);
        Int tr = M[0][0] + M[1][1] + M[2][2];
        Int det = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
        if (tr != b || det != c) return expect(false, "trace/det equal b, c for " + r.str());
        // sum 1/f_i = 1 structurally: t-coefficient equals the constant term
        // of t^3 - b t^2 + c t - c.
        auto p = codegree_spectrum(r).charpoly();
        if (p.a1 != -p.a0) return expect(false, "charpoly c t - c structure");
        if (gcd(r.k, r.l) != 1) return expect(false, "gcd(k,l)=1 for " + r.str());
        auto v1 = run_battery(r);
        auto v2 = run_battery(r.swapped());
        if (v1.status != v2.status || v1.eliminator != v2.eliminator)
            return expect(false, "swap-invariant verdict for " + r.str());
    }
    return ok;
}

// 7. classify-rank3 end to end.
bool crit_classify() {
    auto t0 = std::chrono::steady_clock::now();
    auto rep = classify_rank3(64, 3);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return expect((rep.survivors ==
                   std::vector<std::string>{"K(Z/3Z)", "K(1,0,0,0)", "K(1,0,1,0)",
                                            "K(1,0,2,0)", "K(1,1,1,0)"}),
                  "survivors exactly the 5 rings") &
           expect(secs < 60.0, "runtime < 1 minute");
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::vector<std::string>& args, int kill_after_ms = 0) {
    pid_t pid = fork();
    if (pid == 0) {
        std::vector<char*> argv;
        std::string bin = FR3_CLI_PATH;
        argv.push_back(bin.data());
        std::vector<std::string> copy = args;
        for (auto& a : copy) argv.push_back(a.data());
        argv.push_back(nullptr);
        freopen("/dev/null", "w", stdout);
        freopen("/dev/null", "w", stderr);
        execv(FR3_CLI_PATH, argv.data());
        _exit(127);
    }
    if (kill_after_ms > 0) {
        usleep(kill_after_ms * 1000);
        kill(pid, SIGKILL);
    }
    int status = 0;
    waitpid(pid, &status, 0);
    return status;
}

// 8. Determinism: jobs 1 vs 8 byte-identical; kill-and-resume equals fresh.
bool crit_determinism() {
    setenv("FR3_CHECKPOINT_DIR", "/tmp", 1);
    std::string o1 = "/tmp/fr3_acc_j1.jsonl", o8 = "/tmp/fr3_acc_j8.jsonl";
    run_cli({"search", "--max-k", "1000", "--jobs", "1", "--out", o1});
    run_cli({"search", "--max-k", "1000", "--jobs", "8", "--out", o8});
    std::string base = slurp(o1);
    bool ok = expect(!base.empty() && base == slurp(o8), "jobs 1 vs 8 byte-identical");
    ok &= expect(slurp(o1 + ".l0.jsonl") == slurp(o8 + ".l0.jsonl"), "l0 sidecar identical");

    // Kill mid-run, then resume from the checkpoint; a larger bound keeps the
    // run alive long enough to be interrupted.
    std::string of = "/tmp/fr3_acc_fresh.jsonl", orr = "/tmp/fr3_acc_resumed.jsonl";
    run_cli({"search", "--max-k", "8000", "--jobs", "4", "--out", of});
    std::remove(orr.c_str());
    run_cli({"search", "--max-k", "8000", "--jobs", "4", "--out", orr}, 1200);
    std::string ck = "/tmp/fr3_search_8000_4.ckpt.json";
    bool had_checkpoint = std::ifstream(ck).good();
    run_cli({"search", "--max-k", "8000", "--jobs", "4", "--out", orr, "--resume"});
    ok &= expect(had_checkpoint, "kill left a checkpoint behind");
    ok &= expect(slurp(of) == slurp(orr), "resumed run equals fresh run byte-for-byte");
    for (const auto& f : {o1, o8, of, orr, o1 + ".l0.jsonl", o8 + ".l0.jsonl",
                          of + ".l0.jsonl", orr + ".l0.jsonl"})
        std::remove(f.c_str());
    return ok;
}

}  // namespace

int main() {
    run_criterion(1, "table-reproduction", crit_table);
    run_criterion(2, "b50-enumeration", crit_b50);
    run_criterion(3, "K(2,1,2,1)-exact", crit_2121);
    run_criterion(4, "spherical-pipeline", crit_spherical);
    run_criterion(5, "near-group", crit_neargroup);
    run_criterion(6, "property-suites", crit_properties);
    run_criterion(7, "classify-rank3", crit_classify);
    run_criterion(8, "determinism", crit_determinism);
    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failures);
    return 1;
}
