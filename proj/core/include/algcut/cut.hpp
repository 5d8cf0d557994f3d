#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "algcut/fixed_point.hpp"
#include "algcut/weights.hpp"

namespace algcut {

/// Where the second factor of a point (x, z) of X x P^1 sits.
enum class CutCoordinate {
    zero_section,     // z = [1:0], the w = 0 slice of X x A^1
    infinity_section, // z = [0:1]
    finite_nonzero,   // any other z
};

/// Instability labels for points of X x P^1 (types i, ii, iii) and of the
/// affine chart X x A^1 (types ii', iii').
enum class InstabilityType {
    stable,
    type_i,
    type_ii,
    type_iii,
    type_ii_prime,
    type_iii_prime,
};

std::string_view to_string(InstabilityType t);
std::string_view to_string(CutCoordinate z);

/// Classifies (x, z) in X x P^1 under the antidiagonal torus, cutting at 0.
/// Throws PreconditionError if 0 is an ambient weight.
InstabilityType classify_cut_point(const SupportPattern& p, const AmbientWeights& w, CutCoordinate z);

/// Same classification restricted to X x A^1 (z = infinity is not in the
/// chart and is rejected).
InstabilityType classify_affine_cut_point(const SupportPattern& p, const AmbientWeights& w,
                                          CutCoordinate z);

/// Fixed locus of the cut space: the fixed points of X above the level,
/// plus the reduced space X_r with normal weight 1.
struct CutInventory {
    std::vector<FixedPointDatum> upper_fixed;
    bool reduced_present = false;
    Weight reduced_normal_weight = 1;
};

/// Throws PreconditionError for repeated weights or a non-regular level.
CutInventory cut_fixed_inventory(const AmbientWeights& w, const Level& q);

/// Weight bookkeeping for the embedding of X x P^1 into P(V (x) A^2_N).
struct PsiWeights {
    std::vector<Weight> diagonal_weights;     // sorted multiset
    std::vector<Weight> antidiagonal_weights; // sorted multiset
    bool zero_free = false;
};

/// Throws PreconditionError unless N > max a_i and 0 is not an ambient weight.
PsiWeights psi_weight_check(const AmbientWeights& w, std::int64_t N);

} // namespace algcut
