#include "flopcalc/restriction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flopcalc {

std::vector<int> complement_nodes(const RootSystem& rs, const NodeSet& subset) {
  for (int i : subset.members()) rs.diagram().check_node(i);
  return subset.complement(rs.rank()).members();
}

RestrictedClass restrict_to_curves(const std::vector<int>& curves, const RootVector& alpha) {
  RestrictedClass out;
  out.reserve(curves.size());
  for (int node : curves) out.push_back(alpha[node - 1]);
  return out;
}

RestrictedClass restrict_root(const RootSystem& rs, const NodeSet& subset, const RootVector& alpha) {
  if (static_cast<int>(alpha.size()) != rs.rank())
    throw DomainError("restrict: vector has wrong length for diagram " + rs.diagram().name);
  return restrict_to_curves(complement_nodes(rs, subset), alpha);
}

namespace {

bool is_zero(const RestrictedClass& v) {
  return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
}

long long height_of(const RestrictedClass& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

void sort_classes(std::vector<RestrictedClass>& classes) {
  std::sort(classes.begin(), classes.end(), [](const RestrictedClass& a, const RestrictedClass& b) {
    const long long ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

// `curves` must enumerate I^c exactly once, in any order.
void check_frame(const RootSystem& rs, const NodeSet& subset, const std::vector<int>& curves) {
  std::vector<int> sorted = curves;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != subset.complement(rs.rank()).members())
    throw DomainError("curve frame does not enumerate the complement of the subset");
}

} // namespace

std::vector<RestrictedClass> restricted_positive_roots_on(const RootSystem& rs, const NodeSet& subset,
                                                          const std::vector<int>& curves) {
  check_frame(rs, subset, curves);
  std::set<RestrictedClass> seen;
  for (const auto& root : rs.positive_roots()) {
    RestrictedClass image = restrict_to_curves(curves, root);
    if (!is_zero(image)) seen.insert(std::move(image));
  }
  std::vector<RestrictedClass> out(seen.begin(), seen.end());
  sort_classes(out);
  return out;
}

std::vector<RestrictedClass> restricted_positive_roots(const RootSystem& rs, const NodeSet& subset) {
  return restricted_positive_roots_on(rs, subset, complement_nodes(rs, subset));
}

EnhancedArrangement enhanced_arrangement_on(const RootSystem& rs, const NodeSet& subset,
                                            const std::vector<int>& curves) {
  EnhancedArrangement arrangement;
  arrangement.subset = subset;
  arrangement.curves = curves;
  std::map<RestrictedClass, std::vector<long long>> by_primitive;
  for (const auto& beta : restricted_positive_roots_on(rs, subset, curves)) {
    long long g = 0;
    for (long long c : beta) g = std::gcd(g, c);
    RestrictedClass primitive(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) primitive[i] = beta[i] / g;
    by_primitive[primitive].push_back(g);
  }
  std::vector<RestrictedClass> order;
  for (const auto& [primitive, _] : by_primitive) order.push_back(primitive);
  sort_classes(order);
  for (const auto& primitive : order) {
    EnhancedRay ray;
    ray.primitive = primitive;
    ray.multiplicities = by_primitive[primitive];
    std::sort(ray.multiplicities.begin(), ray.multiplicities.end());
    arrangement.rays.push_back(std::move(ray));
  }
  return arrangement;
}

EnhancedArrangement enhanced_arrangement(const RootSystem& rs, const NodeSet& subset) {
  return enhanced_arrangement_on(rs, subset, complement_nodes(rs, subset));
}

std::vector<std::pair<RestrictedClass, long long>>
on_affine_arrangement(const RootSystem& rs, const NodeSet& subset, const std::vector<Rat>& theta) {
  const auto curves = complement_nodes(rs, subset);
  if (theta.size() != curves.size())
    throw DomainError("affine arrangement point has wrong dimension");
  std::vector<std::pair<RestrictedClass, long long>> out;
  for (const auto& beta : restricted_positive_roots_on(rs, subset, curves)) {
    Rat pairing(0);
    for (std::size_t i = 0; i < beta.size(); ++i) pairing += Rat(beta[i]) * theta[i];
    if (is_integer(pairing)) out.emplace_back(beta, static_cast<long long>(rat_num(pairing)));
  }
  return out;
}

} // namespace flopcalc
