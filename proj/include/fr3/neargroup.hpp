#pragma once

// Near-group rings K(G,n) with X^2 = sum_G g + nX: codegrees, the I(1)
// decomposition, the A1/A3 feasibility checks, and the full elimination for
// K(Z/2, m) = K(1,0,m,0).

#include "fr3/ints.hpp"
#include "fr3/quad.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fr3 {

struct RankTooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisibilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupDescriptor {
    std::string name;
    Int order;
    std::vector<int> char_degrees;  // all irreducible degrees, including the trivial one
    bool is_abelian = false;
    bool is_cyclic = false;

    bool consistent() const;  // sum of squared degrees equals the order, etc.
};

struct NearGroupRing {
    GroupDescriptor group;
    Int n;
    // d_plus/d_minus are the roots of d^2 = |G| + n d, represented in
    // Q(sqrt(s)) where s is the square-free part of n^2 + 4|G| (s = 2 serves
    // as a dummy radicand when d is rational).
    QuadElem d_plus, d_minus;
    bool d_rational = false;
};

// Rejects |G| < 2 (rank would be < 3) with RankTooSmall.
NearGroupRing make_neargroup(const GroupDescriptor& g, const Int& n);

// Codegrees with multiplicities dim(E): |G|/chi(1) for every nontrivial chi,
// plus 2|G| + n d_plus and 2|G| + n d_minus with multiplicity 1.
std::vector<std::pair<QuadElem, int>> neargroup_codegrees(const NearGroupRing& r);

// Exact verification of sum dim(E)/f_E = 1.
bool completeness_check(const NearGroupRing& r);

enum class NGCheck { Pass, Eliminated };

// Theorem A1: when d_plus is irrational, |G| must divide n and G be abelian.
NGCheck theorem_A1_check(const NearGroupRing& r);

// Theorem A3: abelian G with 0 < n < |G|-1 is impossible; n = |G|-1 forces G
// cyclic.  Also enforces n < |G| for integral rings (Lemma on integrality).
NGCheck theorem_A3_check(const NearGroupRing& r);

struct NearClassifyResult {
    bool pass;
    std::string reason;  // "", "parity", "inequality", "roots_of_unity"
    std::vector<long> multiset;  // the m=4 root-of-unity multiset, when relevant
    long order_N = 0;
};

// Full elimination for K(1,0,m,0) = K(Z/2, m); pass exactly for m in {0,1,2}.
// The m=4 case runs the root-of-unity search at order N.
NearClassifyResult theorem_near_classify(long m, long N = 24);

// Dimensions of the I(1) summands (with multiplicities): 1, A_{E_-}, and
// chi(1) copies of A_{E_chi} per nontrivial chi.
std::vector<std::pair<QuadElem, int>> ngi1_decomposition(const NearGroupRing& r);

// Built-in catalog: cyclic groups to order 16, Z/2 x Z/2, Z/2 x Z/4, D8, Q8.
std::vector<GroupDescriptor> group_catalog();

// Grammar: c<k> for cyclic, products joined with 'x', named d8 and q8.
GroupDescriptor parse_group_spec(const std::string& spec);

}  // namespace fr3
