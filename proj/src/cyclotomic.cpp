#include "fr3/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fr3 {

namespace {

// Exact division of integer polynomials (ascending coefficients); the
// divisor is monic and the division is known to be exact.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    std::vector<Int> q(num.size() - den.size() + 1);
    for (size_t i = q.size(); i-- > 0;) {
        Int f = num[i + den.size() - 1];
        q[i] = f;
        if (f != 0)
            for (size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    return q;
}

std::map<long, std::vector<Int>> phi_cache;
std::mutex phi_mutex;

std::vector<Int> cyclotomic_poly_impl(long N) {
    if (auto it = phi_cache.find(N); it != phi_cache.end()) return it->second;
    std::vector<Int> p(N + 1, Int(0));  // x^N - 1
    p[0] = -1;
    p[N] = 1;
    for (long d = 1; d < N; ++d)
        if (N % d == 0) p = exact_div(std::move(p), cyclotomic_poly_impl(d));
    phi_cache[N] = p;
    return p;
}

// Reduce an integer polynomial (any degree) modulo Phi_N; result length phi(N).
std::vector<Int> reduce_mod_phi(std::vector<Int> v, const std::vector<Int>& phi) {
    size_t deg = phi.size() - 1;
    if (v.size() < deg) v.resize(deg, Int(0));
    for (size_t i = v.size(); i-- > deg;) {
        Int f = v[i];
        if (f != 0)
            for (size_t j = 0; j < phi.size(); ++j) v[i - deg + j] -= f * phi[j];
    }
    v.resize(deg);
    return v;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long N) {
    std::lock_guard lock(phi_mutex);
    cyclotomic_poly_impl(N);
    return phi_cache[N];
}

long euler_phi(long N) { return static_cast<long>(cyclotomic_poly(N).size()) - 1; }

CycInt CycInt::zero(long N) {
    return {N, std::vector<Int>(euler_phi(N), Int(0))};
}

CycInt CycInt::integer(long N, const Int& v) {
    CycInt r = zero(N);
    r.c[0] = v;
    return r;
}

CycInt CycInt::root(long N, long k) {
    k %= N;
    if (k < 0) k += N;
    std::vector<Int> raw(k + 1, Int(0));
    raw[k] = 1;
    return {N, reduce_mod_phi(std::move(raw), cyclotomic_poly(N))};
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (N != o.N) throw std::invalid_argument("CycInt: mixed orders");
    CycInt r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
    if (N != o.N) throw std::invalid_argument("CycInt: mixed orders");
    CycInt r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& v : r.c) v = -v;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (N != o.N) throw std::invalid_argument("CycInt: mixed orders");
    std::vector<Int> raw(2 * c.size(), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j)
            if (o.c[j] != 0) raw[i + j] += c[i] * o.c[j];
    }
    return {N, reduce_mod_phi(std::move(raw), cyclotomic_poly(N))};
}

bool CycInt::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

CycInt CycInt::conj() const {
    std::vector<Int> raw(N, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) raw[(N - i) % N] += c[i];
    return {N, reduce_mod_phi(std::move(raw), cyclotomic_poly(N))};
}

std::complex<long double> CycInt::embed(long a) const {
    std::complex<long double> s = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        long double ang = 2.0L * std::numbers::pi_v<long double> *
                          static_cast<long double>((a * static_cast<long>(i)) % N) / N;
        s += static_cast<long double>(c[i].get_d()) *
             std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

CycInt sqrt_in_cyclotomic(long N, const Int& d) {
    if (d <= 1) throw std::invalid_argument("sqrt_in_cyclotomic: d must be > 1");
    CycInt result = CycInt::integer(N, 1);
    for (const auto& [p, e] : factorize(d)) {
        if (e != 1) throw std::invalid_argument("sqrt_in_cyclotomic: d must be square-free");
        CycInt s = CycInt::zero(N);
        if (p == 2) {
            if (N % 8 != 0) throw std::invalid_argument("sqrt_in_cyclotomic: need 8 | N");
            s = CycInt::root(N, N / 8) + CycInt::root(N, N - N / 8);
        } else {
            long pl = p.get_si();
            if (N % pl != 0) throw std::invalid_argument("sqrt_in_cyclotomic: need p | N");
            // Quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p.
            CycInt g = CycInt::zero(N);
            for (long t = 1; t < pl; ++t) {
                int leg = mpz_legendre(Int(t).get_mpz_t(), p.get_mpz_t());
                CycInt zt = CycInt::root(N, (N / pl) * t);
                g = leg > 0 ? g + zt : g - zt;
            }
            if (pl % 4 == 1) {
                s = g;
            } else {
                if (N % 4 != 0) throw std::invalid_argument("sqrt_in_cyclotomic: need 4 | N");
                // g = i*sqrt(p); divide by i = zeta_4.
                s = g * CycInt::root(N, N - N / 4);
            }
        }
        result = result * s;
    }
    if (!(result * result == CycInt::integer(N, d)))
        throw std::logic_error("sqrt_in_cyclotomic: verification failed");
    return result;
}

std::vector<std::vector<long>> cyc_sum_search(const CycInt& target, int count, long N) {
    // Embeddings used for pruning: one representative a per conjugate pair.
    std::vector<long> embs;
    for (long a = 1; 2 * a <= N; ++a)
        if (std::gcd(a, N) == 1) embs.push_back(a);

    const size_t E = embs.size();
    // roots[k][e] = sigma_{embs[e]}(zeta^k)
    std::vector<std::vector<std::complex<long double>>> rootv(N,
        std::vector<std::complex<long double>>(E));
    for (long k = 0; k < N; ++k)
        for (size_t e = 0; e < E; ++e) {
            long double ang = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>((embs[e] * k) % N) / N;
            rootv[k][e] = {std::cos(ang), std::sin(ang)};
        }
    // Suffix extrema over k >= m, per embedding, for real and imaginary parts.
    std::vector<std::vector<long double>> minRe(N + 1, std::vector<long double>(E, 2)),
        maxRe(N + 1, std::vector<long double>(E, -2)), minIm = minRe, maxIm = maxRe;
    for (long k = N; k-- > 0;)
        for (size_t e = 0; e < E; ++e) {
            minRe[k][e] = std::min(minRe[k + 1][e], rootv[k][e].real());
            maxRe[k][e] = std::max(maxRe[k + 1][e], rootv[k][e].real());
            minIm[k][e] = std::min(minIm[k + 1][e], rootv[k][e].imag());
            maxIm[k][e] = std::max(maxIm[k + 1][e], rootv[k][e].imag());
        }
    std::vector<std::complex<long double>> tgt(E);
    for (size_t e = 0; e < E; ++e) tgt[e] = target.embed(embs[e]);

    const long double eps = 1e-9L;
    std::vector<std::vector<long>> found;
    std::vector<long> pick;
    std::vector<std::complex<long double>> partial(E, 0);
    CycInt exact = CycInt::zero(N);

    auto feasible = [&](long minK, int rem) {
        for (size_t e = 0; e < E; ++e) {
            long double needRe = tgt[e].real() - partial[e].real();
            long double needIm = tgt[e].imag() - partial[e].imag();
            if (needRe < rem * minRe[minK][e] - eps || needRe > rem * maxRe[minK][e] + eps)
                return false;
            if (needIm < rem * minIm[minK][e] - eps || needIm > rem * maxIm[minK][e] + eps)
                return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, long minK, int rem) -> void {
        if (rem == 0) {
            if (exact == target) found.push_back(pick);
            return;
        }
        for (long k = minK; k < N; ++k) {
            pick.push_back(k);
            for (size_t e = 0; e < E; ++e) partial[e] += rootv[k][e];
            CycInt saved = exact;
            exact = exact + CycInt::root(N, k);
            if (feasible(k, rem - 1)) self(self, k, rem - 1);
            exact = std::move(saved);
            for (size_t e = 0; e < E; ++e) partial[e] -= rootv[k][e];
            pick.pop_back();
        }
    };
    if (feasible(0, count)) dfs(dfs, 0, count);
    return found;
}

bool closed_under_squaring(const std::vector<long>& support, long N) {
    for (long k : support) {
        long sq = (2 * k) % N;
        if (std::find(support.begin(), support.end(), sq) == support.end()) return false;
    }
    return true;
}

}  // namespace fr3
