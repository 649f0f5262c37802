#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "flopcalc/dynkin.hpp"
#include "flopcalc/restriction.hpp"
#include "flopcalc/wallcross.hpp"

namespace flopcalc {

/// True iff alpha' is reachable from alpha by BFS over {s_j : j in I} inside
/// the root set. Both inputs must be positive roots with non-zero restriction.
bool orbit_equivalent(const RootSystem& rs, const NodeSet& subset, const RootVector& alpha,
                      const RootVector& alpha_prime);

/// Exhaustive check that pi_I(alpha) = pi_I(alpha') iff the roots lie in the
/// same W_I-orbit, over every pair of positive roots with non-zero restriction.
struct LemmaReport {
  std::size_t roots_considered = 0;
  std::size_t pairs_checked = 0;
  std::size_t orbit_count = 0;
  std::vector<std::pair<RootVector, RootVector>> violations;
  bool ok() const { return violations.empty(); }
};
LemmaReport verify_restriction_lemma(const RootSystem& rs, const NodeSet& subset);

/// Recomputes M_i column-by-column from the full l_I l_{I+i} action, then
/// checks the column structure, the sign dichotomy over the restricted roots
/// of omega_i(I), and that beta -> |M_i beta| is a bijection onto the
/// restricted roots of I.
struct FlopMatrixReport {
  IntMat recomputed;
  bool matches_fast_path = false;
  bool column_structure_ok = false;
  bool sign_dichotomy_ok = false;
  bool bijection_ok = false;
  bool ok() const {
    return matches_fast_path && column_structure_ok && sign_dichotomy_ok && bijection_ok;
  }
};
FlopMatrixReport verify_flop_matrix(const RootSystem& rs, const NodeSet& subset, int i);

/// Runs the chamber enumeration; for I = empty the count must equal |W|.
struct ChamberReport {
  std::size_t count = 0;
  std::optional<unsigned long long> expected;
  bool ok() const { return !expected || count == *expected; }
};
ChamberReport verify_chamber_count(const RootSystem& rs, const NodeSet& subset, std::size_t limit);

/// W_I-orbits of the positive roots with non-zero restriction, as index lists
/// into rs.positive_roots(). Used by the lemma check and the Lagrange test.
std::vector<std::vector<int>> restriction_orbits(const RootSystem& rs, const NodeSet& subset);

} // namespace flopcalc
