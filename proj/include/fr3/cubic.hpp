#pragma once

// Exact handling of monic integer cubics: discriminants, factorization over Q,
// and refinable isolating intervals for real roots.

#include "fr3/ints.hpp"
#include "fr3/polyq.hpp"

#include <optional>
#include <vector>

namespace fr3 {

// Monic cubic t^3 + a2 t^2 + a1 t + a0.
struct IntCubic {
    Int a2, a1, a0;

    polyq::Poly poly() const { return {Rat(a0), Rat(a1), Rat(a2), Rat(1)}; }
    Rat eval(const Rat& x) const { return polyq::eval(poly(), x); }
    Int eval(const Int& x) const { return ((x + a2) * x + a1) * x + a0; }
};

// Discriminant of t^3 + a t^2 + b t + c.
Int cubic_discriminant(const IntCubic& p);

// Irreducible quadratic t^2 + b t + c over Q.
struct QuadFactor {
    Int b, c;
    Int disc() const { return b * b - 4 * c; }
};

struct CubicFactorization {
    std::vector<Int> roots;             // integer roots, with multiplicity, ascending
    std::optional<QuadFactor> quad;     // present iff exactly one integer root splits off
    bool irreducible = false;           // no rational root at all

    bool fully_split() const { return roots.size() == 3; }
};

// Factor a monic integer cubic into monic integer irreducibles.  A monic
// integer cubic has rational roots only at integers, so the outcome is one of:
// three integer roots / one root + irreducible quadratic / irreducible.
CubicFactorization factor_cubic(const IntCubic& p);

// Isolating interval for one real root of a square-free polynomial.
// Invariants: lo < hi, p(lo) and p(hi) have strictly opposite signs, and the
// interval contains exactly one real root of p.
struct RootInterval {
    polyq::Poly p;   // square-free part of the original polynomial
    Rat lo, hi;
    int multiplicity = 1;  // multiplicity of the root in the original input

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    // Shrink until width <= w (bisection; endpoints stay rational).
    void refine(const Rat& w);
    // True if the (exactly representable) rational q lies inside (lo, hi).
    bool contains(const Rat& q) const { return lo < q && q < hi; }
};

// All real roots of p (any degree >= 1, rational coefficients), returned as
// disjoint isolating intervals sorted ascending, each refined to width <= w.
// Multiplicities are recovered from the square-free decomposition; the sum of
// multiplicities equals the number of real roots counted with multiplicity.
std::vector<RootInterval> isolate_real_roots(const polyq::Poly& p, const Rat& w);

std::vector<RootInterval> isolate_real_roots(const IntCubic& p, const Rat& w);

}  // namespace fr3
