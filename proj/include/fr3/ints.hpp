#pragma once

// Exact integer / rational helpers on top of GMP.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fr3 {

using Int = mpz_class;
using Rat = mpq_class;

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Int to_int(unsigned __int128 v) {
    Int hi = Int(static_cast<unsigned long>(v >> 64));
    Int lo = Int(static_cast<unsigned long>(v & ~0ULL));
    return (hi << 64) + lo;
}
inline Int to_int(__int128 v) {
    return v < 0 ? -to_int(static_cast<unsigned __int128>(-(v + 1)) + 1)
                 : to_int(static_cast<unsigned __int128>(v));
}

inline std::optional<__int128> to_i128(const Int& v) {
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return std::nullopt;
    Int a = abs(v);
    unsigned __int128 r = 0;
    for (size_t limb = mpz_size(a.get_mpz_t()); limb-- > 0;)
        r = (r << 64) | mpz_getlimbn(a.get_mpz_t(), limb);
    return v < 0 ? -static_cast<__int128>(r) : static_cast<__int128>(r);
}

// Floor of the square root.
inline Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// Returns the root when x is a perfect square.
inline std::optional<Int> perfect_square_root(const Int& x) {
    if (x < 0) return std::nullopt;
    Int r = isqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

inline bool is_perfect_square(const Int& x) { return perfect_square_root(x).has_value(); }

// Prime factorization, prime -> exponent.  Trial division for small factors,
// Pollard rho + Miller-Rabin beyond.
std::map<Int, unsigned> factorize(Int n);

// x = s * f^2 with s square-free; requires x > 0.
std::pair<Int, Int> squarefree_decompose(const Int& x);

// All pairs (S, T) with 0 <= S <= T and S^2 + T^2 = N.
std::vector<std::pair<Int, Int>> two_squares_representations(const Int& N);

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& d, const Int& n) {
    return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// --- 128-bit fast path used by the exhaustive search -----------------------

using i128 = __int128;
using u128 = unsigned __int128;

// Floor sqrt for nonnegative 128-bit values.
inline u128 isqrt_u128(u128 x) {
    if (x == 0) return 0;
    u128 r = static_cast<u128>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline bool is_square_i128(i128 x, u128* root = nullptr) {
    if (x < 0) return false;
    u128 r = isqrt_u128(static_cast<u128>(x));
    if (root) *root = r;
    return r * r == static_cast<u128>(x);
}

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace fr3
