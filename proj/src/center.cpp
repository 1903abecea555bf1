#include "fr3/center.hpp"

#include <algorithm>

namespace fr3 {

namespace {

// The Frobenius-Perron dimension d_X is the largest real root of
// g(x) = x^3 - (m+l) x^2 - (1 + k^2 - lm) x + l, obtained by eliminating
// d_Y = (d_X^2 - m d_X - 1)/k from the character equations.
FieldPtr build_dimension_field(const Rank3Ring& r) {
    Int a2 = -(r.m + r.l);
    Int a1 = -(1 + r.k * r.k - r.l * r.m);
    Int a0 = r.l;
    IntCubic g{a2, a1, a0};
    auto ivs = isolate_real_roots(g, Rat(1, 1024));
    RootInterval top = ivs.back();
    auto fac = factor_cubic(g);
    for (const Int& root : fac.roots)
        if (top.contains(Rat(root)))
            return NumberField::create({Rat(-root), Rat(1)}, top);
    if (fac.quad)
        return NumberField::create({Rat(fac.quad->c), Rat(fac.quad->b), Rat(1)}, top);
    return NumberField::create(g.poly(), top);
}

NFElem eval_charpoly(const NFElem& t, const Int& b, const Int& c) {
    auto F = t.field();
    return ((t - F->rational(Rat(b))) * t + F->rational(Rat(c))) * t - F->rational(Rat(c));
}

// All three codegrees expressed exactly in the dimension field.
std::vector<NFElem> codegrees_in_field(const FieldPtr& F, const NFElem& f3,
                                       const CodegreeSpectrum& s) {
    std::vector<NFElem> out;
    if (s.kind == Kind::Rational) {
        for (const Int& r : s.factorization.roots) out.push_back(F->rational(Rat(r)));
    } else if (s.kind == Kind::Quadratic) {
        Int r = s.factorization.roots[0];
        if (f3.is_rational())
            throw std::domain_error("center: quadratic codegrees outside the dimension field");
        // f3 is a root of the quadratic factor; its conjugate is b - r - f3.
        out = {F->rational(Rat(r)), F->rational(Rat(s.b - r)) - f3, f3};
    } else {
        // Irreducible p with f3 in the field: the splitting is Galois, so the
        // discriminant is a perfect square and f1 - f2 = +-sqrt(disc)/p'(f3).
        IntCubic p{-s.b, s.c, -s.c};
        auto D0 = perfect_square_root(cubic_discriminant(p));
        if (!D0) throw std::domain_error("center: non-Galois cubic codegree field");
        NFElem pd = F->rational(Rat(3)) * f3 * f3 - F->rational(Rat(2 * s.b)) * f3 +
                    F->rational(Rat(s.c));
        NFElem diff = F->rational(Rat(*D0)) / pd;
        NFElem s1 = F->rational(Rat(s.b)) - f3;
        NFElem half = F->rational(Rat(1) / 2);
        NFElem f1 = (s1 - diff) * half, f2 = (s1 + diff) * half;
        if (f2 < f1) std::swap(f1, f2);
        out = {f1, f2, f3};
    }
    std::sort(out.begin(), out.end(), [](const NFElem& a, const NFElem& b) { return a < b; });
    for (const auto& f : out)
        if (!eval_charpoly(f, s.b, s.c).is_zero())
            throw InternalInconsistency("center: codegree fails its characteristic polynomial");
    return out;
}

using Vec3 = std::array<Int, 3>;

// Product of basis classes in K(k,l,m,n), basis order {1, X, Y}.
Vec3 basis_product(const Rank3Ring& r, int i, int j) {
    if (i == 0) return {Int(j == 0), Int(j == 1), Int(j == 2)};
    if (j == 0) return basis_product(r, 0, i);
    if (i == 1 && j == 1) return {Int(1), r.m, r.k};
    if (i == 2 && j == 2) return {Int(1), r.l, r.n};
    return {Int(0), r.k, r.l};  // XY = YX
}

Vec3 class_mul(const Rank3Ring& r, const Vec3& u, const Vec3& v) {
    Vec3 out{Int(0), Int(0), Int(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (u[i] == 0 || v[j] == 0) continue;
            Vec3 p = basis_product(r, i, j);
            for (int h = 0; h < 3; ++h) out[h] += u[i] * v[j] * p[h];
        }
    return out;
}

}  // namespace

CenterAnalysis induction_unit_decomposition(const Rank3Ring& ring_in) {
    // The analysis is invariant under X <-> Y; orient so that k >= 1 (the
    // elimination of d_Y divides by k).
    Rank3Ring ring = ring_in.k == 0 ? ring_in.swapped() : ring_in;
    CenterAnalysis a;
    a.ring = ring;
    a.field = build_dimension_field(ring);
    a.d_X = a.field->gen();
    NFElem one = a.field->rational(Rat(1));
    a.d_Y = (a.d_X * a.d_X - a.field->rational(Rat(ring.m)) * a.d_X - one) /
            a.field->rational(Rat(ring.k));
    // Character-equation cross-checks.
    if (!(a.d_X * a.d_X ==
          one + a.field->rational(Rat(ring.m)) * a.d_X + a.field->rational(Rat(ring.k)) * a.d_Y))
        throw InternalInconsistency("center: d_X character equation failed");
    if (!(a.d_Y * a.d_Y ==
          one + a.field->rational(Rat(ring.l)) * a.d_X + a.field->rational(Rat(ring.n)) * a.d_Y))
        throw InternalInconsistency("center: d_Y character equation failed");
    a.dim_C = one + a.d_X * a.d_X + a.d_Y * a.d_Y;

    auto spec = codegree_spectrum(ring);
    if (!eval_charpoly(a.dim_C, spec.b, spec.c).is_zero())
        throw InternalInconsistency("center: dim(C) is not a codegree");
    a.codegrees = codegrees_in_field(a.field, a.dim_C, spec);

    for (const NFElem& f : a.codegrees) {
        InductionSummand s;
        s.f = f;
        s.dim_A = a.dim_C / f;
        NFElem t = s.dim_A - one;
        // All nonnegative integer (a1, a2) with a1 d_X + a2 d_Y = dim_A - 1.
        Rat t_hi = t.enclosure(Rat(1) / 4).hi;
        Rat dx_lo = a.d_X.enclosure(Rat(1) / 4).lo;  // d_X >= 1
        Int bound = t_hi <= 0 ? Int(0) : ceil_rat(t_hi / dx_lo);
        for (Int a1 = 0; a1 <= bound; ++a1) {
            NFElem rem = t - a.field->rational(Rat(a1)) * a.d_X;
            if (rem.sign() < 0) break;
            NFElem a2e = rem / a.d_Y;
            if (!a2e.is_rational()) continue;
            Rat a2r = a2e.to_rational();
            if (a2r < 0 || a2r.get_den() != 1) continue;
            s.forget_options.push_back({Int(1), a1, a2r.get_num()});
        }
        if (s.forget_options.empty())
            throw NoIntegerSolution("center: no forgetful image for summand of " + ring.str());
        a.summands.push_back(std::move(s));
    }
    return a;
}

std::pair<NFElem, NFElem> induction_object_profile(const CenterAnalysis& a, int y,
                                                   const std::vector<size_t>& combo) {
    // total = dims-evaluation of the class of sum_Z Z (X_y) Z*.
    Vec3 total_cls{Int(0), Int(0), Int(0)};
    for (int z = 0; z < 3; ++z) {
        Vec3 ez{Int(z == 0), Int(z == 1), Int(z == 2)};
        Vec3 ey{Int(y == 0), Int(y == 1), Int(y == 2)};
        Vec3 c = class_mul(a.ring, ez, class_mul(a.ring, ey, ez));
        for (int h = 0; h < 3; ++h) total_cls[h] += c[h];
    }
    NFElem total = a.field->rational(Rat(total_cls[0])) +
                   a.field->rational(Rat(total_cls[1])) * a.d_X +
                   a.field->rational(Rat(total_cls[2])) * a.d_Y;
    NFElem fixed = a.field->rational(Rat(0));
    for (size_t i = 0; i < a.summands.size(); ++i) {
        const auto& opt = a.summands[i].forget_options[combo[i]];
        // [I(y) : A] equals the multiplicity of y in the forgetful image of A.
        fixed = fixed + a.field->rational(Rat(opt[y])) * a.summands[i].dim_A;
    }
    return {fixed, total};
}

ThetaResult theta_obstruction(const Rank3Ring& ring) {
    CenterAnalysis a;
    try {
        a = induction_unit_decomposition(ring);
    } catch (const NoIntegerSolution&) {
        return ThetaResult::Eliminated;
    }
    for (int y = 1; y <= 2; ++y) {
        bool blocked = true;
        std::vector<size_t> combo(a.summands.size(), 0);
        while (blocked) {
            auto [fixed, total] = induction_object_profile(a, y, combo);
            if (!((fixed - (total - fixed)).sign() > 0)) blocked = false;
            // Advance the combo odometer.
            size_t i = 0;
            for (; i < combo.size(); ++i) {
                if (++combo[i] < a.summands[i].forget_options.size()) break;
                combo[i] = 0;
            }
            if (i == combo.size()) break;
        }
        if (blocked) return ThetaResult::Eliminated;
    }
    return ThetaResult::Inconclusive;
}

}  // namespace fr3
