#pragma once

// Exact arithmetic in Q(alpha) for a chosen real root alpha of an irreducible
// rational polynomial of degree <= 3, with exact sign determination by
// interval refinement.

#include "fr3/cubic.hpp"
#include "fr3/polyq.hpp"

#include <memory>

namespace fr3 {

// Closed rational interval; endpoints are exact.
struct QInterval {
    Rat lo, hi;

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
};

// Horner evaluation of p over an interval.
QInterval eval_interval(const polyq::Poly& p, const QInterval& x);

class NumberField;
using FieldPtr = std::shared_ptr<NumberField>;

class NFElem {
public:
    NFElem() = default;
    NFElem(FieldPtr F, polyq::Poly c);

    const FieldPtr& field() const { return F_; }
    const polyq::Poly& coeffs() const { return c_; }
    Rat coord(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rat to_rational() const;  // requires is_rational()

    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem operator/(const NFElem& o) const;
    NFElem operator-() const;
    bool operator==(const NFElem& o) const;

    // Exact sign of the real number c(alpha).
    int sign() const;
    bool operator<(const NFElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const NFElem& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const NFElem& o) const { return (*this - o).sign() > 0; }

    NFElem inverse() const;

    // Characteristic polynomial of multiplication by this element (monic,
    // degree = field degree).  The element is an algebraic integer iff all
    // coefficients are integers.
    polyq::Poly charpoly() const;
    bool is_algebraic_integer() const;

    // Rational interval enclosing c(alpha) with width <= w.
    QInterval enclosure(const Rat& w) const;

    double approx() const;

private:
    FieldPtr F_;
    polyq::Poly c_;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // minpoly must be monic and irreducible over Q; root must isolate one of
    // its real roots.
    static FieldPtr create(polyq::Poly minpoly, RootInterval root);

    int degree() const { return polyq::degree(minpoly_); }
    const polyq::Poly& minpoly() const { return minpoly_; }

    NFElem element(polyq::Poly c);      // reduce mod minpoly
    NFElem rational(const Rat& v);
    NFElem gen();                       // alpha

    // Enclosure of alpha with width <= w (monotonically refined and cached).
    QInterval alpha_enclosure(const Rat& w);

private:
    NumberField() = default;
    polyq::Poly minpoly_;
    RootInterval root_;
};

}  // namespace fr3
