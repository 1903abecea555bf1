#include "fr3/quad.hpp"

namespace fr3 {

int QuadElem::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 d.
    Rat lhs = a * a, rhs = b * b * Rat(d);
    if (lhs == rhs) return 0;  // only possible if d were a square; defensive
    return lhs > rhs ? sa : sb;
}

std::string QuadElem::str() const {
    if (b == 0) return a.get_str();
    std::string root = "sqrt(" + d.get_str() + ")";
    std::string bs = b == 1 ? root : (b == -1 ? "-" + root : b.get_str() + "*" + root);
    if (a == 0) return bs;
    return a.get_str() + (sgn(b) > 0 ? "+" : "") + bs;
}

}  // namespace fr3
