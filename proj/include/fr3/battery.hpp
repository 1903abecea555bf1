#pragma once

// The categorifiability test battery for K(k,l,m,n): cyclotomic, d-number,
// pseudo-unitary, the generic and small case deciders, and the orchestrated
// verdict chain.

#include "fr3/rank3.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fr3 {

struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Status { Pass, Eliminated, NeedsCenter, NeedsSpherical };

struct Verdict {
    Status status;
    std::string eliminator;  // empty unless eliminated
    std::string witness;     // machine-recheckable evidence
};

// Rational/quadratic kinds always pass; cubic kind passes iff c is a perfect
// square (the codegree field is abelian exactly then).
bool cyclotomic_test(const CodegreeSpectrum& s);

// Every irreducible factor must be a d-number polynomial: cubic requires
// c | b^3, quadratic t^2 - a t + b requires b | a^2, linear always passes.
bool dnumber_test(const CodegreeSpectrum& s);

// sum 1/f_i^2 <= (1 + 1/f3)/2, decided exactly: the left side equals
// 1 - 2b/c, so the test is equivalent to f3 (c-4b) <= c.
bool pseudo_unitary_test(const CodegreeSpectrum& s);

enum class Generic3 { Eliminated, Inapplicable };
Generic3 generic3_test(const Int& b, const Int& c);

struct B50Enumeration {
    std::vector<Rank3Ring> positive;  // all canonical rings with 3 >= k >= l > 0
    std::vector<Rank3Ring> l0;        // K(1,0,m,0) for m <= 6 (b < 50)
};
B50Enumeration enumerate_b50();

enum class Small3Branch {
    A,  // k^2 - lm = 1, l = 0: the K(1,0,m,0) family
    B,  // k^2 - lm = 1, m = 0, l <= 3: finite list
    C,  // k^2 - lm = 2 Pell family, killed symbolically by the d-number test
    D,  // K(2,1,2,1)
};

struct Small3Decision {
    Small3Branch branch;
    bool swapped;  // oriented so 2(k^2 - lm) - 1 > 0
    Rank3Ring oriented;
};

// Case analysis under c - 4b <= 4; throws PreconditionViolated otherwise.
Small3Decision small3_decide(const Rank3Ring& r);

// Full chain: cyclotomic -> d-number -> generic3 -> pseudo-unitary ->
// near-group (for the K(1,0,m,0) family) -> small-case center obstruction.
Verdict run_battery(const Rank3Ring& r);

}  // namespace fr3
