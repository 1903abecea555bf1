#include "doctest.h"

#include "fr3/battery.hpp"
#include "random_rings.hpp"

#include <algorithm>

using namespace fr3;

TEST_CASE("cyclotomic test") {
    CHECK(cyclotomic_test(codegree_spectrum(make_rank3(29, 13, 62, 7))));  // c = 189^2
    CHECK_FALSE(cyclotomic_test(codegree_spectrum(make_rank3(1, 2, 0, 4))));  // c = 148
    CHECK(cyclotomic_test(codegree_spectrum(make_rank3(2, 1, 2, 1))));  // quadratic kind
    CHECK(cyclotomic_test(codegree_spectrum(make_rank3(1, 0, 1, 0))));  // rational kind
}

TEST_CASE("d-number test") {
    CHECK_FALSE(dnumber_test(codegree_spectrum(make_rank3(1, 2, 0, 4))));  // 38^3/148
    CHECK(dnumber_test(codegree_spectrum(make_rank3(2, 1, 2, 1))));  // 576/36 = 16
    CHECK(dnumber_test(codegree_spectrum(make_rank3(29, 13, 62, 7))));
    CHECK(dnumber_test(codegree_spectrum(make_rank3(1, 0, 1, 0))));  // fully split
}

TEST_CASE("pseudo-unitary test") {
    CHECK(pseudo_unitary_test(codegree_spectrum(make_rank3(2, 1, 2, 1))));  // c = 4b
    CHECK(pseudo_unitary_test(codegree_spectrum(make_rank3(1, 1, 1, 0))));
    CHECK_FALSE(pseudo_unitary_test(codegree_spectrum(make_rank3(29, 13, 62, 7))));
}

TEST_CASE("generic3 test") {
    CHECK(generic3_test(6930, 35721) == Generic3::Eliminated);
    CHECK(generic3_test(27, 108) == Generic3::Inapplicable);   // c - 4b = 0
    CHECK(generic3_test(14, 49) == Generic3::Inapplicable);    // b < 50
    CHECK(generic3_test(49, 10000) == Generic3::Inapplicable);
    CHECK(generic3_test(50, 205) == Generic3::Eliminated);     // boundary: c - 4b = 5
    CHECK(generic3_test(50, 204) == Generic3::Inapplicable);   // c - 4b = 4
}

TEST_CASE("b < 50 enumeration") {
    auto e = enumerate_b50();
    REQUIRE(e.positive.size() == 11);
    CHECK(std::is_sorted(e.positive.begin(), e.positive.end()));
    for (const auto& r : e.positive) {
        CHECK(canonicalize(r) == r);
        CHECK(r.k <= 3);
        CHECK(r.l >= 1);
    }
    // Exactly K(1,1,1,0) and K(2,1,2,1) pass both integer tests.
    std::vector<Rank3Ring> survivors;
    for (const auto& r : e.positive) {
        auto s = codegree_spectrum(r);
        if (cyclotomic_test(s) && dnumber_test(s)) survivors.push_back(r);
    }
    REQUIRE(survivors.size() == 2);
    CHECK(survivors[0] == make_rank3(1, 1, 1, 0));
    CHECK(survivors[1] == make_rank3(2, 1, 2, 1));

    REQUIRE(e.l0.size() == 7);
    for (size_t m = 0; m < e.l0.size(); ++m) {
        CHECK(e.l0[m].m == Int(m));
        auto [b, c] = compute_bc(e.l0[m]);
        CHECK(b == Int(m) * Int(m) + 10);
        CHECK(b < 50);
    }
}

TEST_CASE("small3 case decisions") {
    CHECK(small3_decide(make_rank3(1, 0, 5, 0)).branch == Small3Branch::A);
    CHECK(small3_decide(make_rank3(1, 2, 0, 4)).branch == Small3Branch::B);
    CHECK(small3_decide(make_rank3(1, 1, 0, 1)).branch == Small3Branch::B);
    CHECK(small3_decide(make_rank3(2, 1, 2, 1)).branch == Small3Branch::D);
    // Next Pell-family member: 10^2 - 2*7^2 = 2 gives K(10,7,14,5).
    auto pell = small3_decide(make_rank3(10, 7, 14, 5));
    CHECK(pell.branch == Small3Branch::C);
    CHECK_FALSE(pell.swapped);
    // Orientation: K(1,1,1,0) has 2(k^2-lm)-1 < 0 and flips to K(1,1,0,1).
    auto flipped = small3_decide(make_rank3(1, 1, 1, 0));
    CHECK(flipped.swapped);
    CHECK(flipped.oriented == make_rank3(1, 1, 0, 1));
    CHECK(flipped.branch == Small3Branch::B);
    CHECK_THROWS_AS(small3_decide(make_rank3(29, 13, 62, 7)), PreconditionViolated);
}

TEST_CASE("run_battery verdicts") {
    auto pass = run_battery(make_rank3(1, 1, 1, 0));
    CHECK(pass.status == Status::Pass);

    auto center = run_battery(make_rank3(2, 1, 2, 1));
    CHECK(center.status == Status::Eliminated);
    CHECK(center.eliminator == "center_obstruction");

    auto cyc = run_battery(make_rank3(1, 3, 0, 9));
    CHECK(cyc.status == Status::Eliminated);
    CHECK(cyc.eliminator == "cyclotomic");

    auto dn = run_battery(make_rank3(1, 2, 0, 4));
    CHECK(dn.status == Status::Eliminated);
    CHECK(dn.eliminator == "cyclotomic");  // fails both; cyclotomic fires first

    // K(1,0,m,0) family routes through the near-group theorem.
    for (long m = 0; m <= 2; ++m)
        CHECK(run_battery(make_rank3(1, 0, m, 0)).status == Status::Pass);
    // Odd m >= 3 already fails the d-number test (2(m^2+8) divides (m^2+8)^2
    // only for even m); even m >= 4 reaches the near-group theorem.
    for (long m : {3, 5, 11}) {
        auto v = run_battery(make_rank3(1, 0, m, 0));
        CHECK(v.status == Status::Eliminated);
        CHECK(v.eliminator == "d_number");
    }
    for (long m : {4, 6, 12}) {
        auto v = run_battery(make_rank3(1, 0, m, 0));
        CHECK(v.status == Status::Eliminated);
        CHECK(v.eliminator == "near_group");
    }

    // Pell family beyond K(2,1,2,1): c = 2700 is not a perfect square.
    auto pell = run_battery(make_rank3(10, 7, 14, 5));
    CHECK(pell.status == Status::Eliminated);
    CHECK(pell.eliminator == "cyclotomic");

    // Cubic table ring: both integer tests pass, elimination is deferred.
    auto tab = run_battery(make_rank3(29, 13, 62, 7));
    CHECK(tab.status == Status::NeedsSpherical);
}

TEST_CASE("battery properties on random rings") {
    auto rings = random_valid_rings(300, 20260823);
    for (const auto& r : rings) {
        auto s = codegree_spectrum(r);
        // generic3 elimination implies the pseudo-unitary test fails.
        if (generic3_test(s.b, s.c) == Generic3::Eliminated)
            CHECK_FALSE(pseudo_unitary_test(s));
        // Verdicts are swap-invariant.
        auto v1 = run_battery(r);
        auto v2 = run_battery(r.swapped());
        CHECK(v1.status == v2.status);
        CHECK(v1.eliminator == v2.eliminator);
        if (v1.status == Status::Eliminated) CHECK_FALSE(v1.witness.empty());
    }
}
