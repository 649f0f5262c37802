#include "flopcalc/wallcross.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace flopcalc {

int Ambient::coord_of_node(int node) const {
  for (int p = 0; p < dim(); ++p)
    if (curves[p] == node) return p;
  return -1;
}

Ambient Ambient::initial(const RootSystem& rs, NodeSet subset) {
  Ambient a;
  a.diagram = rs.diagram().name;
  a.curves = complement_nodes(rs, subset);
  a.labels = a.curves;
  a.subset = std::move(subset);
  return a;
}

FlopStep omega(const RootSystem& rs, const NodeSet& subset, int i) {
  rs.diagram().check_node(i);
  if (subset.contains(i))
    throw DomainError("invalid curve: node " + std::to_string(i) + " lies in the contracted subset");
  FlopStep step;
  step.source_subset = subset;
  step.node = i;
  const NodeSet enlarged = subset.with(i);
  step.new_node = rs.dynkin_involution_at(enlarged, i);
  step.target_subset = enlarged.without(step.new_node);
  return step;
}

namespace {

// M_i in the shared label frame: act with l_I l_{I+i} on the lifted source
// basis roots and project onto the target frame. Column p is the image of the
// basis vector at source_curves[p], read off at the target_curves coordinates.
// The column structure (-e_i at the flopped coordinate, e_k + lambda_k e_i
// with lambda_k >= 0 elsewhere) is asserted, not assumed.
IntMat flop_forward_matrix(const RootSystem& rs, const NodeSet& subset, int i,
                           const std::vector<int>& source_curves,
                           const std::vector<int>& target_curves, int flop_coord) {
  const WeylElement w = rs.compose(rs.longest_element(subset), rs.longest_element(subset.with(i)));
  const int dim = static_cast<int>(source_curves.size());
  IntMat m(dim);
  for (int p = 0; p < dim; ++p) {
    RootVector alpha(rs.rank(), 0);
    alpha[source_curves[p] - 1] = 1;
    const RootVector image = rs.apply(w, alpha);
    for (int q = 0; q < dim; ++q) m.at(q, p) = image[target_curves[q] - 1];
    for (int q = 0; q < dim; ++q) {
      if (q == flop_coord && p != flop_coord) {
        if (m.at(q, p) < 0) throw InconsistencyError("flop matrix: negative lambda coefficient");
        continue;
      }
      const long long expected = (p == flop_coord) ? (q == flop_coord ? -1 : 0) : (q == p ? 1 : 0);
      if (m.at(q, p) != expected)
        throw InconsistencyError("flop matrix column violates the -e_i / e_k + lambda e_i shape");
    }
  }
  return m;
}

} // namespace

std::pair<FlopStep, Ambient> flop(const RootSystem& rs, const Ambient& ambient, int i) {
  if (ambient.diagram != rs.diagram().name)
    throw DomainError("ambient belongs to diagram " + ambient.diagram + ", not " + rs.diagram().name);
  const int coord = ambient.coord_of_node(i);
  if (coord < 0)
    throw DomainError("invalid curve: node " + std::to_string(i) +
                      " is not a curve of the current ambient");

  FlopStep step = omega(rs, ambient.subset, i);
  step.coord = coord;

  Ambient flopped = ambient;
  flopped.subset = step.target_subset;
  flopped.curves[coord] = step.new_node;

  step.matrix.forward =
      flop_forward_matrix(rs, ambient.subset, i, flopped.curves, ambient.curves, coord);
  step.matrix.inverse =
      flop_forward_matrix(rs, flopped.subset, step.new_node, ambient.curves, flopped.curves, coord);
  step.matrix.dual = step.matrix.inverse.transposed();

  if (step.matrix.forward * step.matrix.inverse != IntMat::identity(ambient.dim()))
    throw InconsistencyError("flop matrices are not mutually inverse");
  return {std::move(step), std::move(flopped)};
}

FlopStep flop_step(const RootSystem& rs, const NodeSet& subset, int i) {
  return flop(rs, Ambient::initial(rs, subset), i).first;
}

FlopMatrix flop_matrix(const RootSystem& rs, const NodeSet& subset, int i) {
  return flop_step(rs, subset, i).matrix;
}

bool coset_condition(const RootSystem& rs, const NodeSet& subset, const WeylElement& w,
                     const NodeSet& k) {
  const WeylElement winv = rs.inverse(w);
  for (int j : subset.members())
    if (!rs.in_parabolic(rs.compose(rs.compose(winv, rs.simple_reflection(j)), w), k)) return false;
  for (int j : k.members())
    if (!rs.in_parabolic(rs.compose(rs.compose(w, rs.simple_reflection(j)), winv), subset))
      return false;
  return true;
}

WeylElement coset_minimal_rep(const RootSystem& rs, const NodeSet& subset, const WeylElement& w,
                              const NodeSet& k) {
  if (!coset_condition(rs, subset, w, k))
    throw InconsistencyError("coset condition W_I x = x W_K fails");
  WeylElement x = w;
  for (;;) {
    bool descended = false;
    for (int j : k.members()) {
      WeylElement next = rs.compose(x, rs.simple_reflection(j));
      if (next.length < x.length) {
        x = std::move(next);
        descended = true;
        break;
      }
    }
    if (!descended) return x;
  }
}

ChamberGraph enumerate_chambers(const RootSystem& rs, const NodeSet& subset, std::size_t limit) {
  ChamberGraph graph;
  graph.diagram = rs.diagram().name;
  graph.subset = subset;

  std::map<std::pair<NodeSet, std::vector<long long>>, int> index;
  auto key_of = [](const NodeSet& k, const WeylElement& rep) {
    return std::make_pair(k, rep.mat.a);
  };

  Chamber origin;
  origin.rep = rs.identity_element();
  origin.subset = subset;
  origin.ambient = Ambient::initial(rs, subset);
  origin.comparison = IntMat::identity(origin.ambient.dim());
  index[key_of(subset, origin.rep)] = 0;
  graph.vertices.push_back(std::move(origin));
  graph.incident.emplace_back();

  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int from = queue.front();
    queue.pop_front();
    // Copy: vertices may reallocate while we append targets.
    const Chamber chamber = graph.vertices[from];
    const NodeSet& k = chamber.subset;
    const WeylElement wall_base = rs.compose(chamber.rep, rs.longest_element(k));
    for (int p = 0; p < chamber.ambient.dim(); ++p) {
      auto [step, flopped_ambient] = flop(rs, chamber.ambient, chamber.ambient.curves[p]);
      const WeylElement crossed =
          rs.compose(wall_base, rs.longest_element(k.with(step.node)));
      const WeylElement rep = coset_minimal_rep(rs, subset, crossed, step.target_subset);

      const auto key = key_of(step.target_subset, rep);
      auto found = index.find(key);
      int to;
      if (found == index.end()) {
        if (graph.vertices.size() >= limit)
          throw LimitError("chamber enumeration exceeded limit " + std::to_string(limit));
        to = static_cast<int>(graph.vertices.size());
        index[key] = to;
        Chamber next;
        next.rep = rep;
        next.subset = step.target_subset;
        next.ambient = flopped_ambient;
        next.comparison = chamber.comparison * step.matrix.dual;
        next.parent_vertex = from;
        next.parent_edge = static_cast<int>(graph.edges.size());
        graph.vertices.push_back(std::move(next));
        graph.incident.emplace_back();
        queue.push_back(to);
      } else {
        to = found->second;
        if (graph.vertices[to].ambient != flopped_ambient)
          throw InconsistencyError("chamber reached along two paths with different curve frames");
      }
      graph.incident[from].push_back(static_cast<int>(graph.edges.size()));
      graph.edges.push_back(ChamberEdge{from, to, std::move(step)});
    }
  }
  return graph;
}

IntMat comparison_map(const std::vector<FlopStep>& path, int dim) {
  IntMat n = IntMat::identity(dim);
  for (std::size_t t = 0; t < path.size(); ++t) {
    if (t > 0 && path[t].source_subset != path[t - 1].target_subset)
      throw DomainError("comparison map: flop steps do not compose");
    if (path[t].matrix.dual.n != dim) throw DomainError("comparison map: dimension mismatch");
    n = n * path[t].matrix.dual;
  }
  return n;
}

} // namespace flopcalc
