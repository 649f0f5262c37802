#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flopcalc/rational.hpp"
#include "flopcalc/restriction.hpp"
#include "flopcalc/wallcross.hpp"

namespace flopcalc {

/// Genus-zero GV invariants n_beta of a flopping contraction with Dynkin data
/// (diagram, I). Keys are curve classes in the ambient frame; every key must
/// be a restricted positive root and every value positive (zeroes omitted).
/// The values themselves are geometric input; only the support is dictated.
struct GVTable {
  Ambient ambient;
  std::map<RestrictedClass, Int> entries;
};

/// Divisor class in the basis {D_i} dual to the curves (D_i . C_j = delta_ij).
struct DivisorVector {
  std::vector<Rat> coeffs;
};

/// Point with non-zero exact rational Novikov coordinates q_i.
struct NovikovPoint {
  explicit NovikovPoint(std::vector<Rat> values);
  const std::vector<Rat>& coords() const { return coords_; }

private:
  std::vector<Rat> coords_;
};

/// Validates support and positivity against the ambient's restricted roots.
void check_table(const RootSystem& rs, const GVTable& table);

/// Transport across the flop at the curve at node `i` of the table ambient:
/// n'_beta = n_{|M_i . beta|}. Support becomes exactly the restricted-root set
/// of omega_i(I); the multiset of values is preserved.
GVTable transform_gv(const RootSystem& rs, const GVTable& table, int i);

/// Aspinwall-Morrison: N_beta = sum over coordinatewise divisors d of beta of
/// n_{beta/d} / d^3. Zero when nothing divides.
Rat gw_number(const GVTable& table, const RestrictedClass& beta);

/// gamma . beta with beta an integer class.
Rat pair_divisor_class(const DivisorVector& gamma, const RestrictedClass& beta);

/// Closed form of the quantum potential,
///   Phi = sum_beta n_beta (g1.beta)(g2.beta)(g3.beta) q^beta / (1 - q^beta).
/// Refuses pole points: throws PoleError naming the first class with q^beta = 1.
Rat quantum_potential(const GVTable& table, const DivisorVector& g1, const DivisorVector& g2,
                      const DivisorVector& g3, const NovikovPoint& q);

/// q^beta as an exact rational (Laurent monomial; beta may have negative entries).
Rat novikov_monomial(const NovikovPoint& q, const RestrictedClass& beta);

/// Supported classes beta with sum_i beta_i p_i integral: the pole locus of the
/// potential in the rescaled coordinates p_i.
std::vector<RestrictedClass> pole_diagnostics(const GVTable& table, const std::vector<Rat>& p);

/// Novikov change of variables across a flop step: returns the source-side
/// point q with q^beta = r^{M_i^{-1} beta}; in particular q_i = 1/r_i.
NovikovPoint novikov_pullback(const FlopStep& step, const NovikovPoint& r);

/// Both sides of the Crepant Transformation identity at the flop of the curve at node `i`:
///   lhs = Phi+_r(g1,g2,g3) - Phi_q(N_i g1, N_i g2, N_i g3),  q = pullback(r)
///   rhs = -(g1.C+)(g2.C+)(g3.C+) sum_k k^3 n_{k C_i}.
/// The g's live on the flopped side. Throws PoleError if either side is at a pole.
std::pair<Rat, Rat> ctc_residual(const RootSystem& rs, const GVTable& table, int i,
                                 const DivisorVector& g1, const DivisorVector& g2,
                                 const DivisorVector& g3, const NovikovPoint& r);

/// dim A_con = sum n_beta (beta . 1)^2.
Int dim_contraction(const GVTable& table);

/// Dimension after mutation at the curve at node `i`:
/// sum n_beta ((M_i^{-1} beta) . 1)^2; agrees with dim_contraction of the
/// transported table.
Int dim_after_mutation(const RootSystem& rs, const GVTable& table, int i);

} // namespace flopcalc
