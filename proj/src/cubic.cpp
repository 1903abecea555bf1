#include "fr3/cubic.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fr3 {

using polyq::Poly;

Int cubic_discriminant(const IntCubic& p) {
    const Int &a = p.a2, &b = p.a1, &c = p.a0;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c;
}

namespace {

// Yun's square-free decomposition: list of (factor, multiplicity).
std::vector<std::pair<Poly, int>> squarefree_decomposition(Poly p) {
    p = polyq::monic(p);
    std::vector<std::pair<Poly, int>> out;
    if (polyq::degree(p) < 1) return out;
    Poly dp = polyq::derivative(p);
    Poly a = polyq::gcd(p, dp);
    Poly b = polyq::divrem(p, a).first;
    Poly c = polyq::divrem(dp, a).first;
    Poly d = polyq::sub(c, polyq::derivative(b));
    for (int i = 1; polyq::degree(b) > 0; ++i) {
        Poly qi = polyq::gcd(b, d);
        if (polyq::degree(qi) > 0) out.emplace_back(qi, i);
        b = polyq::divrem(b, qi).first;
        c = polyq::divrem(d, qi).first;
        d = polyq::sub(c, polyq::derivative(b));
    }
    return out;
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p, polyq::derivative(p)};
    while (polyq::degree(chain.back()) > 0) {
        Poly r = polyq::divrem(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        chain.push_back(polyq::scale(r, Rat(-1)));
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int vars = 0, last = 0;
    for (const auto& q : chain) {
        int s = sgn(polyq::eval(q, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++vars;
        last = s;
    }
    return vars;
}

// Number of roots in (a, b].
int count_roots(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sign_variations(chain, a) - sign_variations(chain, b);
}

Rat cauchy_bound(const Poly& p) {
    Rat m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rat v = abs(p[i] / p.back());
        if (v > m) m = v;
    }
    return m + 1;
}

// Isolating open intervals with non-vanishing endpoints for a square-free q.
void isolate_squarefree(const Poly& q, std::vector<std::pair<Rat, Rat>>& out) {
    auto chain = sturm_chain(q);
    struct Seg { Rat a, b; int n; };
    Rat B = cauchy_bound(q);
    std::vector<Seg> stack;
    int total = count_roots(chain, -B, B);
    if (total > 0) stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 1) {
            Rat a = s.a, b = s.b;
            if (polyq::eval(q, b) == 0) {
                // The unique root is exactly b; wrap it symmetrically.
                Rat d = (b - a) / 2;
                while (polyq::eval(q, b - d) == 0 || polyq::eval(q, b + d) == 0 ||
                       count_roots(chain, b - d, b + d) != 1)
                    d /= 2;
                out.emplace_back(b - d, b + d);
                continue;
            }
            if (polyq::eval(q, a) == 0) {
                Rat d = (b - a) / 2;
                while (polyq::eval(q, a + d) == 0 || count_roots(chain, a + d, b) != 1) d /= 2;
                a += d;
            }
            out.emplace_back(a, b);
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        int nl = count_roots(chain, s.a, m);
        if (nl > 0) stack.push_back({s.a, m, nl});
        if (s.n - nl > 0) stack.push_back({m, s.b, s.n - nl});
    }
}

}  // namespace

void RootInterval::refine(const Rat& w) {
    while (width() > w) {
        Rat m = mid();
        Rat pm = polyq::eval(p, m);
        if (pm == 0) {
            // Exact rational root; any symmetric shrink keeps the sign change.
            Rat a = m - lo, b = hi - m;
            Rat d = std::min(w, std::min(a, b)) / 2;
            lo = m - d;
            hi = m + d;
            return;
        }
        if (sgn(pm) == sgn(polyq::eval(p, lo))) lo = m;
        else hi = m;
    }
}

std::vector<RootInterval> isolate_real_roots(const polyq::Poly& p, const Rat& w) {
    std::vector<RootInterval> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        std::vector<std::pair<Rat, Rat>> ivs;
        isolate_squarefree(factor, ivs);
        for (const auto& [lo, hi] : ivs) out.push_back({factor, lo, hi, mult});
    }
    for (auto& r : out) r.refine(w);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.mid() < y.mid(); });
    // Intervals coming from distinct square-free factors may still overlap in a
    // root-free region; shrink until pairwise disjoint.
    for (bool again = true; again;) {
        again = false;
        for (size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi >= out[i + 1].lo) {
                Rat nw = std::min(out[i].width(), out[i + 1].width()) / 4;
                out[i].refine(nw);
                out[i + 1].refine(nw);
                again = true;
            }
        }
    }
    return out;
}

std::vector<RootInterval> isolate_real_roots(const IntCubic& p, const Rat& w) {
    return isolate_real_roots(p.poly(), w);
}

CubicFactorization factor_cubic(const IntCubic& p) {
    CubicFactorization out;
    for (const auto& iv : isolate_real_roots(p, Rat(1, 4))) {
        Int lo = ceil_rat(iv.lo), hi = floor_rat(iv.hi);
        for (Int n = lo; n <= hi; ++n)
            if (p.eval(n) == 0)
                for (int i = 0; i < iv.multiplicity; ++i) out.roots.push_back(n);
    }
    std::sort(out.roots.begin(), out.roots.end());
    if (out.roots.size() == 3) return out;
    if (out.roots.size() == 1) {
        const Int& r = out.roots[0];
        Int B = p.a2 + r;
        Int C = p.a1 + r * B;
        QuadFactor q{B, C};
        // A monic integer quadratic with square discriminant splits into
        // integer roots, which would have been caught above.
        assert(!is_perfect_square(q.disc()));
        out.quad = q;
        return out;
    }
    if (out.roots.empty()) {
        out.irreducible = true;
        return out;
    }
    throw std::logic_error("factor_cubic: inconsistent root count");
}

}  // namespace fr3
