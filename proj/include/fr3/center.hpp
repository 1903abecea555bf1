#pragma once

// Numerical shadow of Drinfeld-center induction for rank-3 rings: decompose
// I(1) by formal codegrees, solve forgetful-image multiplicities, and run the
// twist-trace obstruction.

#include "fr3/numfield.hpp"
#include "fr3/rank3.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace fr3 {

struct NoIntegerSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InductionSummand {
    NFElem f;      // formal codegree
    NFElem dim_A;  // dim(C) / f
    // Each option is [a0=1, a1, a2]: the forgetful image 1 + a1 X + a2 Y.
    // The summand with dim_A = 1 is the unit, with the single option [1,0,0].
    std::vector<std::array<Int, 3>> forget_options;
};

struct CenterAnalysis {
    Rank3Ring ring;
    FieldPtr field;              // Q(d_X)
    NFElem d_X, d_Y, dim_C;      // dim_C = 1 + d_X^2 + d_Y^2 = f3
    std::vector<NFElem> codegrees;  // f1 <= f2 <= f3 in the field
    std::vector<InductionSummand> summands;  // aligned with codegrees
};

// Builds the dimension field, expresses all codegrees in it, and solves the
// forgetful multiplicities for every I(1) summand.  Throws NoIntegerSolution
// when some summand admits no nonnegative integer forgetful image.
CenterAnalysis induction_unit_decomposition(const Rank3Ring& ring);

// For a non-unit basis element y (1 = X, 2 = Y) and a choice of forgetful
// image per summand (combo[i] indexes summands[i].forget_options), returns
// (fixed_part, total): the theta-fixed dimension within F(I(y)) and the full
// dimension of F(I(y)).
std::pair<NFElem, NFElem> induction_object_profile(const CenterAnalysis& a, int y,
                                                   const std::vector<size_t>& combo);

// Eliminated iff for some non-unit y, every consistent choice of forgetful
// images makes fixed_part strictly exceed total - fixed_part (so
// Tr(theta_{I(y)}) cannot vanish).  NoIntegerSolution also eliminates.
enum class ThetaResult { Eliminated, Inconclusive };
ThetaResult theta_obstruction(const Rank3Ring& ring);

}  // namespace fr3
