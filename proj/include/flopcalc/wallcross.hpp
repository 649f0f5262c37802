#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flopcalc/dynkin.hpp"
#include "flopcalc/restriction.hpp"

namespace flopcalc {

/// A subset I of the diagram together with an ordered curve frame. Coordinate
/// p reads the root coefficient at `curves[p]`; `labels[p]` is the persistent
/// curve name, which survives flops while the underlying node changes. For a
/// fresh (diagram, I) both lists are the ascending complement of I.
struct Ambient {
  std::string diagram;
  NodeSet subset;
  std::vector<int> curves;
  std::vector<int> labels;

  int dim() const { return static_cast<int>(curves.size()); }
  int coord_of_node(int node) const;

  static Ambient initial(const RootSystem& rs, NodeSet subset);
  bool operator==(const Ambient&) const = default;
};

/// Change of basis across a single-curve flop, in the curve frames of the two
/// sides. `forward` is M_i mapping classes over omega_i(I)^c to classes over
/// I^c; `inverse` is M_i^{-1}; `dual` is N_i = (M_i^{-1})^T acting on divisor
/// coordinates, Theta_{omega_i(I)} -> Theta_I.
struct FlopMatrix {
  IntMat forward;
  IntMat inverse;
  IntMat dual;
};

/// One wall crossing: flop the curve at `node` (in I^c). The flopped curve on
/// the other side sits at `new_node` = iota_{I+i}(i) and keeps the old curve's
/// label; `coord` is its position in the frame.
struct FlopStep {
  NodeSet source_subset;
  int node = 0;
  NodeSet target_subset;
  int new_node = 0;
  int coord = -1;
  FlopMatrix matrix;
};

/// Wall-crossing rule omega_i(I) = I + i - iota_{I+i}(i); no matrices yet.
FlopStep omega(const RootSystem& rs, const NodeSet& subset, int i);

/// Full flop step from an explicit ambient, flopping the curve at node `i` of
/// the current complement (paths name curves by current-ambient node id).
/// Returns the step (matrices included) and the flopped ambient.
std::pair<FlopStep, Ambient> flop(const RootSystem& rs, const Ambient& ambient, int i);

/// Convenience for a fresh (diagram, I) with the ascending frame.
FlopStep flop_step(const RootSystem& rs, const NodeSet& subset, int i);
FlopMatrix flop_matrix(const RootSystem& rs, const NodeSet& subset, int i);

/// Checks W_I w = w W_K on parabolic generators, both directions.
bool coset_condition(const RootSystem& rs, const NodeSet& subset, const WeylElement& w,
                     const NodeSet& k);

/// Unique minimal-length element of w W_K, by greedy descent (smallest
/// generator first). Throws InconsistencyError if W_I w != w W_K.
WeylElement coset_minimal_rep(const RootSystem& rs, const NodeSet& subset, const WeylElement& w,
                              const NodeSet& k);

/// Chamber of Theta_I: coset pair (x, K) with x of minimal length, plus the
/// curve frame and the comparison map N : Theta_chamber -> Theta_I accumulated
/// along the BFS tree.
struct Chamber {
  WeylElement rep;
  NodeSet subset;
  Ambient ambient;
  IntMat comparison;
  int parent_vertex = -1;
  int parent_edge = -1;
};

struct ChamberEdge {
  int from = 0;
  int to = 0;
  FlopStep step;
};

struct ChamberGraph {
  std::string diagram;
  NodeSet subset;
  std::vector<Chamber> vertices;
  std::vector<ChamberEdge> edges;              // directed; each wall appears from both sides
  std::vector<std::vector<int>> incident;      // vertex -> edge ids, one per wall
};

/// BFS over Cham(diagram, I) from (identity, I) via the wall-crossing rule.
/// Deduplicates on (rep matrix, subset); throws LimitError past `limit`
/// vertices. Deterministic: walls are explored in frame order.
ChamberGraph enumerate_chambers(const RootSystem& rs, const NodeSet& subset, std::size_t limit);

/// Product of the dual matrices N_i along a composable chain of flop steps
/// starting at the ambient of the first step; maps Theta_target -> Theta_I.
IntMat comparison_map(const std::vector<FlopStep>& path, int dim);

constexpr std::size_t kDefaultChamberLimit = 1000000;

} // namespace flopcalc
