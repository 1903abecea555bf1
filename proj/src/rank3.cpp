#include "fr3/rank3.hpp"

#include <algorithm>

namespace fr3 {

std::string Rank3Ring::str() const {
    return "K(" + k.get_str() + "," + l.get_str() + "," + m.get_str() + "," + n.get_str() + ")";
}

Rank3Ring make_rank3(const Int& k, const Int& l, const Int& m, const Int& n, bool is_signed) {
    Rank3Ring r{k, l, m, n, is_signed};
    if (!r.satisfies_klmn())
        throw AssociativityViolation("make_rank3: k^2+l^2 != kn+lm+1 for " + r.str());
    if (!is_signed) {
        if (k < 0 || l < 0 || m < 0 || n < 0)
            throw AssociativityViolation("make_rank3: negative entry in unsigned ring " + r.str());
        if (gcd(k, l) != 1)
            throw InternalInconsistency("make_rank3: gcd(k,l) != 1 for " + r.str());
    }
    return r;
}

Rank3Ring canonicalize(const Rank3Ring& r) {
    Rank3Ring best = r;
    // Signed rings are also identified up to basis signs: X -> -X flips
    // (l, m) and Y -> -Y flips (k, n); both leave b, c and the constraint
    // unchanged.  Pick the lexicographically largest representative.
    std::vector<Rank3Ring> variants{r};
    if (r.is_signed) {
        variants.push_back({r.k, -r.l, -r.m, r.n, true});
        variants.push_back({-r.k, r.l, r.m, -r.n, true});
        variants.push_back({-r.k, -r.l, -r.m, -r.n, true});
    }
    for (const auto& v : variants) {
        if (best < v) best = v;
        Rank3Ring s = v.swapped();
        if (best < s) best = s;
    }
    return best;
}

std::array<std::array<Int, 3>, 3> codegree_matrix(const Rank3Ring& r) {
    Int lm = r.l + r.m, kn = r.k + r.n;
    return {{{Int(3), lm, kn},
             {lm, 3 + lm * r.m + kn * r.k, lm * r.k + kn * r.l},
             {kn, lm * r.k + kn * r.l, 3 + lm * r.l + kn * r.n}}};
}

namespace {

Int det3(const std::array<std::array<Int, 3>, 3>& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

}  // namespace

std::pair<Int, Int> compute_bc(const Rank3Ring& r) {
    Int b = (r.k + r.n) * (r.k + r.n) + (r.l + r.m) * (r.l + r.m) + 9;
    Int u = r.k * r.l - r.m * r.n;
    Int v = r.k * r.k + r.k * r.n - r.l * r.l - r.m * r.l;
    Int c = 4 * b - 9 + u * u + v * v;
    auto M = codegree_matrix(r);
    if (M[0][0] + M[1][1] + M[2][2] != b || det3(M) != c)
        throw InternalInconsistency("compute_bc: trace/det cross-check failed for " + r.str());
    return {b, c};
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Rational: return "rational";
        case Kind::Quadratic: return "quadratic";
        default: return "cubic";
    }
}

CodegreeSpectrum codegree_spectrum(const Rank3Ring& r) {
    auto [b, c] = compute_bc(r);
    CodegreeSpectrum s;
    s.b = b;
    s.c = c;
    IntCubic p{-b, c, -c};
    s.factorization = factor_cubic(p);
    s.kind = s.factorization.fully_split() ? Kind::Rational
             : s.factorization.quad        ? Kind::Quadratic
                                           : Kind::Cubic;
    for (const auto& iv : isolate_real_roots(p, Rat(1, 1024)))
        for (int i = 0; i < iv.multiplicity; ++i) s.roots.push_back(iv);
    return s;
}

std::optional<QuadSpectrum> quad_spectrum(const CodegreeSpectrum& s) {
    if (!s.factorization.quad) return std::nullopt;
    const QuadFactor& q = *s.factorization.quad;
    Int disc = q.disc();
    if (disc <= 0) return std::nullopt;  // codegrees of valid rings are real
    auto [d, f] = squarefree_decompose(disc);
    // Roots of t^2 + bt + c: (-b +- f*sqrt(d))/2.
    QuadElem lo{Rat(-q.b) / 2, Rat(-f) / 2, d};
    QuadElem hi{Rat(-q.b) / 2, Rat(f) / 2, d};
    QuadElem rat = QuadElem::rational(Rat(s.factorization.roots[0]), d);
    std::vector<QuadElem> v{lo, rat, hi};
    std::sort(v.begin(), v.end(),
              [](const QuadElem& a, const QuadElem& b) { return (a - b).sign() < 0; });
    return QuadSpectrum{v[0], v[1], v[2], s.factorization.roots[0]};
}

bool BasedRing::validate() const {
    int r = rank;
    auto n = [&](int i, int j, int h) { return N[i][j][h]; };
    for (int i = 0; i < r; ++i) {
        if (dual[dual[i]] != i) return false;
        for (int j = 0; j < r; ++j) {
            if (n(i, j, 0) != (dual[j] == i ? 1 : 0)) return false;
            for (int h = 0; h < r; ++h) {
                if (n(i, j, h) < 0) return false;
                if (n(i, j, h) != n(dual[j], dual[i], dual[h])) return false;
            }
        }
    }
    // Associativity: (b_i b_j) b_k = b_i (b_j b_k).
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int h = 0; h < r; ++h) {
                    Int lhs = 0, rhs = 0;
                    for (int t = 0; t < r; ++t) {
                        lhs += n(i, j, t) * n(t, k, h);
                        rhs += n(j, k, t) * n(i, t, h);
                    }
                    if (lhs != rhs) return false;
                }
    return true;
}

BasedRing BasedRing::cyclic_group_ring(int order) {
    BasedRing g;
    g.name = "K(Z/" + std::to_string(order) + "Z)";
    g.rank = order;
    g.N.assign(order, std::vector<std::vector<Int>>(order, std::vector<Int>(order, Int(0))));
    g.dual.resize(order);
    for (int i = 0; i < order; ++i) {
        g.dual[i] = (order - i) % order;
        for (int j = 0; j < order; ++j) g.N[i][j][(i + j) % order] = 1;
    }
    return g;
}

}  // namespace fr3
