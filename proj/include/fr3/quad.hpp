#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt(d)), d square-free > 1.

#include "fr3/ints.hpp"

#include <stdexcept>
#include <string>

namespace fr3 {

struct QuadElem {
    Rat a, b;  // a + b*sqrt(d)
    Int d;     // square-free, > 1

    QuadElem() : a(0), b(0), d(2) {}
    QuadElem(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {}
    static QuadElem rational(Rat v, Int d_) { return {std::move(v), Rat(0), std::move(d_)}; }

    bool is_rational() const { return b == 0; }
    QuadElem conj() const { return {a, -b, d}; }
    Rat norm() const { return a * a - b * b * Rat(d); }
    Rat trace() const { return 2 * a; }

    // Exact sign of a + b*sqrt(d).
    int sign() const;

    QuadElem operator-() const { return {-a, -b, d}; }
    QuadElem operator+(const QuadElem& o) const { check(o); return {a + o.a, b + o.b, d}; }
    QuadElem operator-(const QuadElem& o) const { check(o); return {a - o.a, b - o.b, d}; }
    QuadElem operator*(const QuadElem& o) const {
        check(o);
        return {a * o.a + b * o.b * Rat(d), a * o.b + b * o.a, d};
    }
    QuadElem operator/(const QuadElem& o) const {
        check(o);
        Rat n = o.norm();
        if (n == 0) throw std::domain_error("QuadElem: division by zero");
        return *this * QuadElem{o.a / n, -o.b / n, d};
    }

    bool operator==(const QuadElem& o) const { return d == o.d && a == o.a && b == o.b; }
    bool operator<(const QuadElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadElem& o) const { return (*this - o).sign() <= 0; }

    std::string str() const;

private:
    void check(const QuadElem& o) const {
        if (d != o.d) throw std::invalid_argument("QuadElem: mixed radicands");
    }
};

}  // namespace fr3
