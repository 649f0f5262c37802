#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flopcalc/errors.hpp"

namespace flopcalc {

/// Integer vector in the simple-root basis of h; one entry per node of the diagram.
using RootVector = std::vector<long long>;

/// Simply-laced Dynkin diagram with Bourbaki labelling:
///   A_n: chain 1-2-...-n
///   D_n: chain 1-...-(n-2), with n-1 and n both attached to n-2
///   E_n: chain 1-3-4-5-...-n, with node 2 attached to node 4
/// Disjoint unions (for induced subdiagrams and toy cases) are supported via
/// disjoint_union(); parse_diagram() accepts only single ADE types.
struct DynkinDiagram {
  std::string name;
  int rank = 0;
  std::vector<std::pair<int, int>> edges; // 1-based, first < second, sorted
  std::vector<std::vector<int>> adj;      // adj[i] = sorted neighbours of node i; adj[0] unused

  bool adjacent(int a, int b) const;
  void check_node(int i) const;
};

/// Parses `[ADE][n]` with the rank legal for the letter (A>=1, D>=4, E in {6,7,8}).
DynkinDiagram parse_diagram(std::string_view spec);

/// Side-by-side union; nodes of `b` get shifted above the nodes of `a`.
DynkinDiagram disjoint_union(const DynkinDiagram& a, const DynkinDiagram& b);

/// Subset of the nodes of a diagram, kept sorted.
class NodeSet {
public:
  NodeSet() = default;
  explicit NodeSet(std::vector<int> members);
  static NodeSet full(int rank);

  bool contains(int i) const;
  NodeSet with(int i) const;    // I + i
  NodeSet without(int i) const; // I - j
  NodeSet complement(int rank) const;

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }

  bool operator==(const NodeSet&) const = default;
  bool operator<(const NodeSet& o) const { return members_ < o.members_; }

private:
  std::vector<int> members_;
};

/// Dense square integer matrix, row-major.
struct IntMat {
  int n = 0;
  std::vector<long long> a;

  IntMat() = default;
  explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  static IntMat identity(int size);

  long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  IntMat transposed() const;
  std::vector<long long> apply(const std::vector<long long>& v) const;

  bool operator==(const IntMat&) const = default;
};

IntMat operator*(const IntMat& lhs, const IntMat& rhs);

/// Element of the Weyl group, acting on h in the basis {alpha_i}. The inverse
/// is carried along so the contragredient action never needs a matrix inversion.
struct WeylElement {
  IntMat mat;
  IntMat inv;
  int length = 0;

  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

/// An ADE root system: the positive roots (enumerated once, ordered by height
/// then lexicographically) plus the Weyl-group operations built on them.
/// Immutable after construction; every method is const and safe to call
/// concurrently.
class RootSystem {
public:
  explicit RootSystem(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank; }

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  bool is_positive_root(const RootVector& v) const;
  bool is_root(const RootVector& v) const;
  const RootVector& highest_root() const { return positive_.back(); }

  /// s_i(v): negate the i-th coefficient and add the sum of the adjacent ones.
  RootVector reflect(int node, const RootVector& v) const;

  WeylElement identity_element() const;
  WeylElement simple_reflection(int node) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  RootVector apply(const WeylElement& w, const RootVector& v) const;

  /// Contragredient action on the dual space Theta: theta -> (w^-1)^T theta.
  std::vector<long long> apply_dual(const WeylElement& w, const std::vector<long long>& theta) const;

  /// Number of positive roots sent to negative roots.
  int length_of(const IntMat& m) const;

  /// Longest element of the parabolic W_Gamma (identity for Gamma empty);
  /// greedy ascent, smallest eligible generator first.
  WeylElement longest_element(const NodeSet& gamma) const;

  /// iota_Gamma(j): the unique k with l_Gamma(alpha_j) = -alpha_k.
  int dynkin_involution_at(const NodeSet& gamma, int j) const;
  std::map<int, int> dynkin_involution(const NodeSet& gamma) const;

  /// Stabiliser test: w fixes the dual vector with 1 on J^c and 0 on J
  /// exactly when w lies in the parabolic W_J.
  bool in_parabolic(const WeylElement& w, const NodeSet& j) const;

  std::vector<std::vector<int>> components(const NodeSet& gamma) const;
  std::string classify_component(const std::vector<int>& component) const;
  std::string classify_subset(const NodeSet& gamma) const; // e.g. "A1+A6"
  unsigned long long weyl_order(const NodeSet& gamma) const;

private:
  WeylElement make_element(IntMat mat, IntMat inv) const;

  DynkinDiagram diagram_;
  std::vector<RootVector> positive_;
  std::map<RootVector, int> positive_index_;
};

} // namespace flopcalc
