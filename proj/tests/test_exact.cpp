#include "doctest.h"

#include "fr3/cubic.hpp"
#include "fr3/cyclotomic.hpp"
#include "fr3/ints.hpp"
#include "fr3/quad.hpp"

#include <random>

using namespace fr3;

TEST_CASE("perfect squares") {
    auto r = perfect_square_root(Int(35721));
    REQUIRE(r.has_value());
    CHECK(*r == 189);
    CHECK(perfect_square_root(Int(0)) == Int(0));
    CHECK(!is_perfect_square(Int(148)));
    CHECK(!is_perfect_square(Int(-4)));
}

TEST_CASE("two squares representations") {
    CHECK(two_squares_representations(369) ==
          std::vector<std::pair<Int, Int>>{{12, 15}});
    CHECK(two_squares_representations(377) ==
          std::vector<std::pair<Int, Int>>{{4, 19}, {11, 16}});
    CHECK(two_squares_representations(3).empty());
}

TEST_CASE("two squares vs brute force") {
    std::mt19937_64 rng(0xf00d);
    for (int iter = 0; iter < 50; ++iter) {
        long N = static_cast<long>(rng() % 5000);
        std::vector<std::pair<Int, Int>> brute;
        for (long s = 0; s * s * 2 <= N; ++s)
            for (long t = s; s * s + t * t <= N; ++t)
                if (s * s + t * t == N) brute.emplace_back(s, t);
        CHECK(two_squares_representations(N) == brute);
    }
}

TEST_CASE("squarefree decomposition") {
    CHECK(squarefree_decompose(108) == std::pair<Int, Int>(3, 6));
    CHECK(squarefree_decompose(1) == std::pair<Int, Int>(1, 1));
    CHECK(squarefree_decompose(35721) == std::pair<Int, Int>(1, 189));
}

TEST_CASE("cubic discriminant") {
    CHECK(cubic_discriminant({-6, 11, -6}) == 4);
    CHECK(is_perfect_square(cubic_discriminant({-14, 49, -49})));
    // Repeated root: (t-1)^2 (t-2).
    CHECK(cubic_discriminant({-4, 5, -2}) == 0);
}

TEST_CASE("factor_cubic oracle cases") {
    {
        auto f = factor_cubic({-27, 108, -108});
        REQUIRE(f.roots == std::vector<Int>{3});
        REQUIRE(f.quad.has_value());
        CHECK(f.quad->b == -24);
        CHECK(f.quad->c == 36);
    }
    {
        auto f = factor_cubic({-10, 32, -32});
        CHECK(f.roots == std::vector<Int>{2, 4, 4});
        CHECK(!f.quad);
    }
    {
        auto f = factor_cubic({-6930, 35721, -35721});
        CHECK(f.irreducible);
        CHECK(f.roots.empty());
    }
}

TEST_CASE("factor_cubic reconstructs random inputs") {
    std::mt19937_64 rng(0xc0ffee);
    auto coeff = [&] { return Int(static_cast<long>(rng() % 2000001) - 1000000); };
    for (int iter = 0; iter < 300; ++iter) {
        IntCubic p{coeff(), coeff(), coeff()};
        auto f = factor_cubic(p);
        // Rebuild the polynomial from the factors.
        polyq::Poly prod{Rat(1)};
        for (const Int& r : f.roots) prod = polyq::mul(prod, {Rat(-r), Rat(1)});
        if (f.quad) prod = polyq::mul(prod, {Rat(f.quad->c), Rat(f.quad->b), Rat(1)});
        if (f.irreducible) prod = p.poly();
        CHECK(prod == p.poly());
        if (f.quad) CHECK(!is_perfect_square(f.quad->disc()));
    }
}

TEST_CASE("isolate_real_roots") {
    {
        auto ivs = isolate_real_roots(IntCubic{-14, 49, -49}, Rat(1, 1000));
        REQUIRE(ivs.size() == 3);
        // Roots near 1.84, 2.86, 9.30; sum of reciprocals equals 1.
        CHECK((ivs[0].lo > Rat(183) / 100 && ivs[0].hi < Rat(185) / 100));
        CHECK((ivs[1].lo > Rat(285) / 100 && ivs[1].hi < Rat(287) / 100));
        CHECK((ivs[2].lo > Rat(929) / 100 && ivs[2].hi < Rat(930) / 100));
        Rat recip_lo = 0, recip_hi = 0;
        for (const auto& iv : ivs) {
            recip_lo += Rat(1) / iv.hi;
            recip_hi += Rat(1) / iv.lo;
        }
        CHECK(recip_lo <= 1);
        CHECK(1 <= recip_hi);
    }
    {
        // (t-2)(t-3)(t-6)
        auto ivs = isolate_real_roots(IntCubic{-11, 36, -36}, Rat(1, 100));
        REQUIRE(ivs.size() == 3);
        CHECK(ivs[0].contains(Rat(2)));
        CHECK(ivs[1].contains(Rat(3)));
        CHECK(ivs[2].contains(Rat(6)));
    }
    {
        auto ivs = isolate_real_roots(IntCubic{-27, 108, -108}, Rat(1, 100));
        REQUIRE(ivs.size() == 3);
        CHECK(ivs[1].contains(Rat(3)));
    }
    {
        // Double root handling: (t-1)^2 (t-5).
        auto ivs = isolate_real_roots(IntCubic{-7, 11, -5}, Rat(1, 100));
        REQUIRE(ivs.size() == 2);
        CHECK(ivs[0].multiplicity == 2);
        CHECK(ivs[0].contains(Rat(1)));
        CHECK(ivs[1].multiplicity == 1);
        CHECK(ivs[1].contains(Rat(5)));
    }
}

TEST_CASE("root interval refinement") {
    auto ivs = isolate_real_roots(IntCubic{-6930, 35721, -35721}, Rat(1, 4));
    REQUIRE(ivs.size() == 3);
    for (auto& iv : ivs) {
        iv.refine(Rat(1, Int(1) << 40));
        CHECK(iv.width() <= Rat(1, Int(1) << 40));
        CHECK(sgn(polyq::eval(iv.p, iv.lo)) * sgn(polyq::eval(iv.p, iv.hi)) <= 0);
    }
    CHECK(ivs[0].lo + ivs[1].lo + ivs[2].lo <= 6930);
    CHECK(6930 <= ivs[0].hi + ivs[1].hi + ivs[2].hi);
}

TEST_CASE("quadratic field sign and inverse") {
    QuadElem x{Rat(12), Rat(-6), Int(3)};
    CHECK(x.sign() > 0);
    // 12 - 6*sqrt(3) ~ 1.607: between 1 and 2.
    CHECK((x - QuadElem::rational(Rat(1), 3)).sign() > 0);
    CHECK((x - QuadElem::rational(Rat(2), 3)).sign() < 0);
    QuadElem one = QuadElem::rational(Rat(1), 3);
    CHECK(x / x == one);
    QuadElem y{Rat(0), Rat(1), Int(2)};
    CHECK((y * y) == QuadElem::rational(Rat(2), 2));
    CHECK(y.sign() > 0);
    CHECK((-y).sign() < 0);
}

TEST_CASE("cyclotomic basics") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(24) == 8);
    CHECK(cyclotomic_poly(4) == std::vector<Int>{1, 0, 1});
    // zeta_24^24 = 1
    CycInt z = CycInt::root(24, 1);
    CycInt acc = CycInt::integer(24, 1);
    for (int i = 0; i < 24; ++i) acc = acc * z;
    CHECK(acc == CycInt::integer(24, 1));
    // Conjugation is an involution and fixes zeta + zeta^-1.
    CycInt w = CycInt::root(24, 5) + CycInt::root(24, 19);
    CHECK(w.conj() == w);
    CHECK(CycInt::root(24, 5).conj() == CycInt::root(24, 19));
}

TEST_CASE("square roots in cyclotomic fields") {
    for (long d : {2, 3, 5, 6, 7, 10}) {
        long N = 0;
        switch (d) {
            case 2: N = 8; break;
            case 3: N = 12; break;
            case 5: N = 5; break;
            case 6: N = 24; break;
            case 7: N = 28; break;
            case 10: N = 40; break;
        }
        CycInt s = sqrt_in_cyclotomic(N, d);
        CHECK(s * s == CycInt::integer(N, d));
        // Positive under the identity embedding.
        CHECK(s.embed(1).real() > 0);
        CHECK(std::abs(s.embed(1).imag()) < 1e-12L);
    }
    CHECK_THROWS(sqrt_in_cyclotomic(12, 2));  // needs 8 | N
}

TEST_CASE("cyc_sum_search small cases") {
    {
        auto res = cyc_sum_search(CycInt::integer(1, 3), 3, 1);
        REQUIRE(res.size() == 1);
        CHECK(res[0] == std::vector<long>{0, 0, 0});
    }
    {
        auto res = cyc_sum_search(CycInt::zero(4), 2, 4);
        REQUIRE(res.size() == 2);
        CHECK(res[0] == std::vector<long>{0, 2});
        CHECK(res[1] == std::vector<long>{1, 3});
    }
}

TEST_CASE("cyc_sum_search: -2-2*sqrt(6) as ten 24th roots of unity") {
    CycInt target = CycInt::integer(24, -2) -
                    (sqrt_in_cyclotomic(24, 6) + sqrt_in_cyclotomic(24, 6));
    auto res = cyc_sum_search(target, 10, 24);
    REQUIRE(res.size() == 1);
    CHECK(res[0] == std::vector<long>{7, 7, 11, 11, 12, 12, 13, 13, 17, 17});
    CHECK(!closed_under_squaring({7, 11, 12, 13, 17}, 24));
}

TEST_CASE("closed_under_squaring") {
    CHECK(closed_under_squaring({0, 1}, 2));      // {1, -1}
    CHECK(closed_under_squaring({0, 1, 2}, 3));   // full group mu_3
    CHECK(!closed_under_squaring({1}, 4));        // i^2 = -1 not in set
}
