#pragma once

// Exact arithmetic in Z[zeta_N] modulo the N-th cyclotomic polynomial,
// square roots of integers embedded via Gauss sums, and a complete search for
// multisets of N-th roots of unity with a prescribed sum.

#include "fr3/ints.hpp"

#include <complex>
#include <vector>

namespace fr3 {

// Coefficients of the N-th cyclotomic polynomial, ascending, degree phi(N).
const std::vector<Int>& cyclotomic_poly(long N);

long euler_phi(long N);

struct CycInt {
    long N = 1;
    std::vector<Int> c;  // length phi(N), coefficients on 1, x, ..., x^(phi-1)

    static CycInt zero(long N);
    static CycInt integer(long N, const Int& v);
    static CycInt root(long N, long k);  // zeta_N^k

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;
    bool operator==(const CycInt& o) const { return N == o.N && c == o.c; }

    bool is_zero() const;
    CycInt conj() const;  // complex conjugation, zeta -> zeta^(N-1)

    // Image under the embedding zeta -> exp(2*pi*i*a/N).
    std::complex<long double> embed(long a) const;
};

// sqrt(d) as an element of Z[zeta_N] for square-free d > 1.  Requires enough
// roots of unity in the field (8 | N when d is even, 4 | N when some prime
// factor is 3 mod 4, and p | N for every odd prime factor p).  The result is
// verified by exact squaring; throws std::invalid_argument when N is unusable.
CycInt sqrt_in_cyclotomic(long N, const Int& d);

// All multisets {k_1 <= ... <= k_count} with sum of zeta_N^{k_i} equal to
// target.  Complete depth-first enumeration; candidate branches are pruned
// with floating-point bounds per complex embedding and every surviving leaf is
// verified exactly, so the output is exhaustive.
std::vector<std::vector<long>> cyc_sum_search(const CycInt& target, int count, long N);

// Whether {2k mod N : k in support} is contained in support.
bool closed_under_squaring(const std::vector<long>& support, long N);

}  // namespace fr3
