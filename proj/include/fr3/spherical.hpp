#pragma once

// Sphericalization-elimination pipeline for cubic rings K(k,l,m,n) that pass
// the cyclotomic and d-number tests: bound the sphericalized invariant c~,
// sieve candidate (b~, c~) pairs, reconstruct signed rings, and discard the
// remaining candidates by exact field (non-)isomorphism.

#include "fr3/cubic.hpp"
#include "fr3/polyq.hpp"
#include "fr3/rank3.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fr3 {

struct UnresolvedSurvivor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PrecisionExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// min(4b-9+(kl+mn)^2+(2k^2+2lm+1)^2, 4b-9+(kl+mn)^2+(2l^2+2kn+1)^2).
Int ctilde_bound(const Rank3Ring& r);

// All admissible c~ = c*u <= bound: c~ odd and a perfect square (the
// sphericalized field must be abelian), with every prime of c~ outside c
// appearing with exponent divisible by 6.  Sorted ascending.
std::vector<Int> enumerate_ctilde(const Rank3Ring& r);

// All 0 < b~ <= b with b~ = b (mod 4) and c~ | b~^3 (sieved by the divisor
// prod p^ceil(e_p/3), then rechecked exactly).  Sorted descending from b.
std::vector<Int> enumerate_btilde(const Int& b, const Int& ctilde);

// Keep iff p~(t) = t^3 - b~t^2 + c~t - c~ is irreducible with perfect-square
// discriminant (abelian cubic field).
bool abelian_filter(const Int& btilde, const Int& ctilde);

// All signed rings with (k~+n~)^2 + (l~+m~)^2 = b~-9 and
// (3k~-n~)^2 + (3l~-m~)^2 = b~-1, normalized by k~+n~ >= 0 and l~+m~ >= 0,
// satisfying the associativity constraint.  Canonicalized, deduped, sorted.
std::vector<Rank3Ring> reconstruct_rings(const Int& btilde, const Int& ctilde);

struct FieldIsoResult {
    bool isomorphic;
    // When isomorphic: q with ptilde(q(t)) = 0 mod p(t), so t -> q(t) embeds
    // a root of ptilde into Q[t]/(p(t)).
    polyq::Poly certificate;
    // Open question bookkeeping: true if one of the four non-sorted root
    // pairings produced an integer sum while the two sorted ones did not.
    bool extra_permutation_mattered = false;
};

// Both cubics must be irreducible and totally real.
FieldIsoResult cubic_field_iso(const IntCubic& p, const IntCubic& ptilde);

struct SphericalCandidate {
    Int btilde, ctilde;
    std::string stage;    // "pivot", "no_ring", "field_iso", "unresolved"
    std::string witness;
    bool discarded = false;
};

struct SphericalReport {
    Rank3Ring ring;
    Int b, c;
    Int bound;
    std::vector<Int> ctilde_values;
    std::vector<SphericalCandidate> survivors;  // post-abelian-filter pairs
    bool eliminated = false;
};

// Steps 1-5.  Pre: cubic ring passing cyclotomic + d-number (throws
// std::invalid_argument otherwise).  Throws UnresolvedSurvivor when some
// candidate cannot be discarded by the automated steps.
SphericalReport eliminate_cubic(const Rank3Ring& r);

}  // namespace fr3
