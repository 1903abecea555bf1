#pragma once

// Rank-3 based rings K(k,l,m,n) with X^2 = 1 + mX + kY, Y^2 = 1 + lX + nY,
// XY = kX + lY, and their codegree data.

#include "fr3/cubic.hpp"
#include "fr3/ints.hpp"
#include "fr3/quad.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fr3 {

struct AssociativityViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

struct Rank3Ring {
    Int k, l, m, n;
    bool is_signed = false;  // sphericalized variants may carry negative entries

    // Associativity constraint k^2 + l^2 = kn + lm + 1.
    bool satisfies_klmn() const { return k * k + l * l == k * n + l * m + 1; }

    Rank3Ring swapped() const { return {l, k, n, m, is_signed}; }
    bool operator==(const Rank3Ring& o) const {
        return k == o.k && l == o.l && m == o.m && n == o.n;
    }
    bool operator<(const Rank3Ring& o) const {
        if (k != o.k) return k < o.k;
        if (l != o.l) return l < o.l;
        if (m != o.m) return m < o.m;
        return n < o.n;
    }
    std::string str() const;
};

// Throws AssociativityViolation when the constraint fails; for unsigned rings
// also requires nonnegative entries and (a consequence of the constraint)
// gcd(k,l) = 1.
Rank3Ring make_rank3(const Int& k, const Int& l, const Int& m, const Int& n,
                     bool is_signed = false);

// The lexicographically larger of (k,l,m,n) and (l,k,n,m); idempotent.
Rank3Ring canonicalize(const Rank3Ring& r);

// Matrix of left multiplication by 1 + X^2 + Y^2 in the basis {1, X, Y}.
std::array<std::array<Int, 3>, 3> codegree_matrix(const Rank3Ring& r);

// b = (k+n)^2 + (l+m)^2 + 9 and c recovered from
// p(2) = 8 + c - 4b = (kl-mn)^2 + (k^2+kn-l^2-ml)^2 - 1, cross-checked against
// the trace and determinant of the codegree matrix.
std::pair<Int, Int> compute_bc(const Rank3Ring& r);

enum class Kind { Rational, Quadratic, Cubic };

std::string kind_name(Kind k);

struct CodegreeSpectrum {
    Int b, c;
    CubicFactorization factorization;
    std::vector<RootInterval> roots;  // f1 <= f2 <= f3, multiplicity expanded
    Kind kind;

    IntCubic charpoly() const { return {-b, c, -c}; }
};

CodegreeSpectrum codegree_spectrum(const Rank3Ring& r);

// Exact codegrees for the quadratic kind: the rational root and the conjugate
// pair (as QuadElem with the paper's ordering f1 <= f2 <= f3).
struct QuadSpectrum {
    QuadElem f1, f2, f3;
    Int rational_root;  // the codegree that is rational
};
std::optional<QuadSpectrum> quad_spectrum(const CodegreeSpectrum& s);

// Generic based ring given by structure constants; used for K(Z/3Z) and other
// group rings where the K(k,l,m,n) presentation does not apply.
struct BasedRing {
    std::string name;
    int rank = 0;
    std::vector<std::vector<std::vector<Int>>> N;  // N[i][j][h]
    std::vector<int> dual;

    bool validate() const;
    static BasedRing cyclic_group_ring(int order);
};

}  // namespace fr3
