#pragma once

#include <utility>
#include <vector>

#include "flopcalc/dynkin.hpp"
#include "flopcalc/rational.hpp"

namespace flopcalc {

/// Curve class: integer vector over the coordinates of I^c. The zero vector is
/// never a restricted positive root.
using RestrictedClass = std::vector<long long>;

/// One ray of the enhanced finite arrangement: a primitive direction together
/// with the strictly increasing list of k for which k * primitive is a
/// restricted positive root. The primitive itself need not occur.
struct EnhancedRay {
  RestrictedClass primitive;
  std::vector<long long> multiplicities;
};

struct EnhancedArrangement {
  NodeSet subset;          // I
  std::vector<int> curves; // coordinate -> underlying node of I^c
  std::vector<EnhancedRay> rays;
};

/// Nodes of I^c in ascending order: the default coordinate frame.
std::vector<int> complement_nodes(const RootSystem& rs, const NodeSet& subset);

/// pi_I(alpha): drop the coordinates indexed by I, read the rest along `curves`.
RestrictedClass restrict_root(const RootSystem& rs, const NodeSet& subset, const RootVector& alpha);
RestrictedClass restrict_to_curves(const std::vector<int>& curves, const RootVector& alpha);

/// Deduplicated non-zero images of the positive roots, ordered by height then
/// lexicographically. The `_on` variant reads coordinates along an explicit
/// curve frame (used when tracking iterated flops).
std::vector<RestrictedClass> restricted_positive_roots(const RootSystem& rs, const NodeSet& subset);
std::vector<RestrictedClass> restricted_positive_roots_on(const RootSystem& rs, const NodeSet& subset,
                                                          const std::vector<int>& curves);

EnhancedArrangement enhanced_arrangement(const RootSystem& rs, const NodeSet& subset);
EnhancedArrangement enhanced_arrangement_on(const RootSystem& rs, const NodeSet& subset,
                                            const std::vector<int>& curves);

/// All restricted positive roots beta with sum_i beta_i theta_i integral,
/// together with that integer. Non-empty exactly when theta lies on H_I^aff.
std::vector<std::pair<RestrictedClass, long long>>
on_affine_arrangement(const RootSystem& rs, const NodeSet& subset, const std::vector<Rat>& theta);

/// Curve classes with non-zero GV invariant: exactly the restricted positive
/// roots, exposed under the enumerative name.
inline std::vector<RestrictedClass> gv_support(const RootSystem& rs, const NodeSet& subset) {
  return restricted_positive_roots(rs, subset);
}

} // namespace flopcalc
