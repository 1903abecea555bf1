#include "fr3/numfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace fr3 {

using polyq::Poly;

QInterval QInterval::operator*(const QInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

QInterval eval_interval(const Poly& p, const QInterval& x) {
    QInterval r{Rat(0), Rat(0)};
    for (size_t i = p.size(); i-- > 0;) {
        r = r * x;
        r.lo += p[i];
        r.hi += p[i];
    }
    return r;
}

FieldPtr NumberField::create(Poly minpoly, RootInterval root) {
    polyq::trim(minpoly);
    if (minpoly.empty() || minpoly.back() != 1)
        throw std::invalid_argument("NumberField: minimal polynomial must be monic");
    auto F = FieldPtr(new NumberField());
    F->minpoly_ = std::move(minpoly);
    F->root_ = std::move(root);
    return F;
}

NFElem NumberField::element(Poly c) {
    return NFElem(shared_from_this(), polyq::mod(std::move(c), minpoly_));
}

NFElem NumberField::rational(const Rat& v) {
    Poly c;
    if (v != 0) c.push_back(v);
    return NFElem(shared_from_this(), std::move(c));
}

NFElem NumberField::gen() {
    if (degree() == 1) return rational(-minpoly_[0]);
    return NFElem(shared_from_this(), Poly{Rat(0), Rat(1)});
}

QInterval NumberField::alpha_enclosure(const Rat& w) {
    root_.refine(w);
    return {root_.lo, root_.hi};
}

NFElem::NFElem(FieldPtr F, Poly c) : F_(std::move(F)), c_(std::move(c)) {
    polyq::trim(c_);
}

Rat NFElem::to_rational() const {
    if (!is_rational()) throw std::domain_error("NFElem: not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

static void check_same(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field()) throw std::invalid_argument("NFElem: mixed fields");
}

NFElem NFElem::operator+(const NFElem& o) const {
    check_same(*this, o);
    return NFElem(F_, polyq::add(c_, o.c_));
}

NFElem NFElem::operator-(const NFElem& o) const {
    check_same(*this, o);
    return NFElem(F_, polyq::sub(c_, o.c_));
}

NFElem NFElem::operator*(const NFElem& o) const {
    check_same(*this, o);
    return NFElem(F_, polyq::mod(polyq::mul(c_, o.c_), F_->minpoly()));
}

NFElem NFElem::operator-() const { return NFElem(F_, polyq::scale(c_, Rat(-1))); }

bool NFElem::operator==(const NFElem& o) const { return F_ == o.F_ && c_ == o.c_; }

NFElem NFElem::inverse() const {
    if (is_zero()) throw std::domain_error("NFElem: division by zero");
    if (is_rational()) return NFElem(F_, Poly{Rat(1) / c_[0]});
    // Extended Euclid in Q[x]: u*c + v*minpoly = gcd = 1.
    Poly r0 = F_->minpoly(), r1 = c_;
    Poly s0, s1{Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = polyq::divrem(r0, r1);
        Poly s2 = polyq::sub(s0, polyq::mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant (minpoly irreducible, c nonzero of lower degree).
    if (polyq::degree(r0) != 0)
        throw std::logic_error("NFElem: inverse of a zero divisor (reducible modulus?)");
    return NFElem(F_, polyq::scale(s0, Rat(1) / r0[0]));
}

NFElem NFElem::operator/(const NFElem& o) const { return *this * o.inverse(); }

int NFElem::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    Rat w(1, 16);
    while (true) {
        QInterval v = eval_interval(c_, F_->alpha_enclosure(w));
        if (!v.contains_zero()) return v.lo > 0 ? 1 : -1;
        // A nonzero residue of degree < deg(minpoly) cannot vanish at alpha,
        // so refinement terminates.
        w /= 16;
    }
}

QInterval NFElem::enclosure(const Rat& w) const {
    Rat rw = w / 4;
    while (true) {
        QInterval v = eval_interval(c_, F_->alpha_enclosure(rw));
        if (v.hi - v.lo <= w) return v;
        rw /= 16;
    }
}

double NFElem::approx() const {
    QInterval v = enclosure(Rat(1, 1000000));
    Rat m = (v.lo + v.hi) / 2;
    return m.get_d();
}

polyq::Poly NFElem::charpoly() const {
    int n = F_->degree();
    // Multiplication matrix in the power basis, column i = x^i * c mod minpoly.
    std::vector<Poly> cols(n);
    Poly cur = c_;
    for (int i = 0; i < n; ++i) {
        cols[i] = cur;
        cur = polyq::mod(polyq::mul(cur, Poly{Rat(0), Rat(1)}), F_->minpoly());
    }
    auto entry = [&](int r, int c) -> Rat {
        return static_cast<size_t>(r) < cols[c].size() ? cols[c][r] : Rat(0);
    };
    if (n == 1) return Poly{-entry(0, 0), Rat(1)};
    if (n == 2) {
        Rat tr = entry(0, 0) + entry(1, 1);
        Rat det = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
        return Poly{det, -tr, Rat(1)};
    }
    Rat tr = entry(0, 0) + entry(1, 1) + entry(2, 2);
    Rat m00 = entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1);
    Rat m11 = entry(0, 0) * entry(2, 2) - entry(0, 2) * entry(2, 0);
    Rat m22 = entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
    Rat det = entry(0, 0) * m00 - entry(0, 1) * (entry(1, 0) * entry(2, 2) - entry(1, 2) * entry(2, 0)) +
              entry(0, 2) * (entry(1, 0) * entry(2, 1) - entry(1, 1) * entry(2, 0));
    return Poly{-det, m00 + m11 + m22, -tr, Rat(1)};
}

bool NFElem::is_algebraic_integer() const {
    for (const Rat& v : charpoly())
        if (v.get_den() != 1) return false;
    return true;
}

}  // namespace fr3
