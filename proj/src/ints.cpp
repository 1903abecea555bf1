#include "fr3/ints.hpp"

#include <stdexcept>

namespace fr3 {

namespace {

Int pollard_rho(const Int& n) {
    // Brent's cycle variant; n must be composite and odd.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x5eedul);
    while (true) {
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = rng.get_z_range(n);
        Int y = x, d = 1;
        Int prod = 1;
        int iter = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff == 0) break;
            prod = (prod * abs(diff)) % n;
            if (++iter % 64 == 0) {
                d = gcd(prod, n);
                if (d > 1) break;
            }
        }
        if (d == 1) d = gcd(prod, n);
        if (d > 1 && d < n) return d;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<Int, unsigned> factorize(Int n) {
    if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
    std::map<Int, unsigned> out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            n /= p;
        }
    }
    // Trial division up to 10^5 clears everything the classifier meets fast.
    for (long p = 41; p <= 100000 && n > 1; p += 2) {
        if (Int(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Int(p)] += 1;
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, out);
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& x) {
    if (x <= 0) throw std::invalid_argument("squarefree_decompose: argument must be positive");
    Int s = 1, f = 1;
    for (const auto& [p, e] : factorize(x)) {
        if (e % 2) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) f *= p;
    }
    return {s, f};
}

std::vector<std::pair<Int, Int>> two_squares_representations(const Int& N) {
    if (N < 0) throw std::invalid_argument("two_squares_representations: negative input");
    std::vector<std::pair<Int, Int>> out;
    Int S = 0;
    while (2 * S * S <= N) {
        if (auto T = perfect_square_root(N - S * S)) out.emplace_back(S, *T);
        ++S;
    }
    return out;
}

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace fr3
