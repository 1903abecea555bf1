#pragma once

// Dense univariate polynomials over Q, coefficient index = power.
// Small degrees only (everything here is degree <= 6).

#include "fr3/ints.hpp"

#include <vector>

namespace fr3::polyq {

using Poly = std::vector<Rat>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, const Rat& s) {
    Poly r = a;
    for (auto& c : r) c *= s;
    trim(r);
    return r;
}

// Division with remainder; b must be nonzero.
inline std::pair<Poly, Poly> divrem(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly derivative(const Poly& p) {
    Poly r;
    for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return r;
}

inline Rat eval(const Poly& p, const Rat& x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Poly monic(Poly p) {
    trim(p);
    if (!p.empty() && p.back() != 1) p = scale(p, Rat(1) / p.back());
    return p;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// a mod m, both over Q.
inline Poly mod(const Poly& a, const Poly& m) { return divrem(a, m).second; }

// Composition a(b).
inline Poly compose(const Poly& a, const Poly& b) {
    Poly r;
    for (size_t i = a.size(); i-- > 0;) {
        r = mul(r, b);
        if (a[i] != 0) {
            if (r.empty()) r.push_back(a[i]);
            else r[0] += a[i];
        }
        trim(r);
    }
    return r;
}

}  // namespace fr3::polyq
