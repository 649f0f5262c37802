#include "flopcalc/dynkin.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

namespace flopcalc {

bool DynkinDiagram::adjacent(int a, int b) const {
  check_node(a);
  check_node(b);
  const auto& nb = adj[a];
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

void DynkinDiagram::check_node(int i) const {
  if (i < 1 || i > rank)
    throw DomainError("node " + std::to_string(i) + " not in diagram " + name +
                      " (rank " + std::to_string(rank) + ")");
}

namespace {

DynkinDiagram build_diagram(std::string name, int rank, std::vector<std::pair<int, int>> edges) {
  DynkinDiagram d;
  d.name = std::move(name);
  d.rank = rank;
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  d.edges = std::move(edges);
  d.adj.assign(rank + 1, {});
  for (const auto& [a, b] : d.edges) {
    d.adj[a].push_back(b);
    d.adj[b].push_back(a);
  }
  for (auto& nb : d.adj) std::sort(nb.begin(), nb.end());
  return d;
}

} // namespace

DynkinDiagram parse_diagram(std::string_view spec) {
  if (spec.size() < 2)
    throw ParseError("diagram spec must match [ADE][n], got '" + std::string(spec) + "'");
  const char letter = spec[0];
  const std::string digits(spec.substr(1));
  if (digits.empty() || digits[0] == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("diagram spec must match [ADE][n], got '" + std::string(spec) + "'");
  if (digits.size() > 3) throw ParseError("diagram rank out of range in '" + std::string(spec) + "'");
  const int n = std::atoi(digits.c_str());

  std::vector<std::pair<int, int>> edges;
  switch (letter) {
    case 'A':
      if (n < 1) throw ParseError("A_n needs n >= 1, got '" + std::string(spec) + "'");
      for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw ParseError("D_n needs n >= 4, got '" + std::string(spec) + "'");
      for (int i = 1; i < n - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 2, n - 1);
      edges.emplace_back(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw ParseError("E_n needs n in {6,7,8}, got '" + std::string(spec) + "'");
      edges.emplace_back(1, 3);
      edges.emplace_back(2, 4);
      for (int i = 3; i < n; ++i) edges.emplace_back(i, i + 1);
      break;
    default:
      throw ParseError("diagram letter must be one of A, D, E, got '" + std::string(spec) + "'");
  }
  return build_diagram(std::string(spec), n, std::move(edges));
}

DynkinDiagram disjoint_union(const DynkinDiagram& a, const DynkinDiagram& b) {
  std::vector<std::pair<int, int>> edges = a.edges;
  for (const auto& [x, y] : b.edges) edges.emplace_back(x + a.rank, y + a.rank);
  return build_diagram(a.name + "+" + b.name, a.rank + b.rank, std::move(edges));
}

NodeSet::NodeSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet NodeSet::full(int rank) {
  std::vector<int> all(rank);
  std::iota(all.begin(), all.end(), 1);
  return NodeSet(std::move(all));
}

bool NodeSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

NodeSet NodeSet::with(int i) const {
  auto m = members_;
  m.push_back(i);
  return NodeSet(std::move(m));
}

NodeSet NodeSet::without(int i) const {
  auto m = members_;
  m.erase(std::remove(m.begin(), m.end(), i), m.end());
  return NodeSet(std::move(m));
}

NodeSet NodeSet::complement(int rank) const {
  std::vector<int> out;
  for (int i = 1; i <= rank; ++i)
    if (!contains(i)) out.push_back(i);
  return NodeSet(std::move(out));
}

IntMat IntMat::identity(int size) {
  IntMat m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::transposed() const {
  IntMat t(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<long long> IntMat::apply(const std::vector<long long>& v) const {
  if (static_cast<int>(v.size()) != n) throw DomainError("matrix/vector dimension mismatch");
  std::vector<long long> out(n, 0);
  for (int r = 0; r < n; ++r) {
    long long acc = 0;
    for (int c = 0; c < n; ++c) acc += at(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

IntMat operator*(const IntMat& lhs, const IntMat& rhs) {
  if (lhs.n != rhs.n) throw DomainError("matrix dimension mismatch");
  IntMat out(lhs.n);
  for (int r = 0; r < lhs.n; ++r)
    for (int k = 0; k < lhs.n; ++k) {
      const long long l = lhs.at(r, k);
      if (l == 0) continue;
      for (int c = 0; c < lhs.n; ++c) out.at(r, c) += l * rhs.at(k, c);
    }
  return out;
}

RootSystem::RootSystem(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const int n = diagram_.rank;
  std::map<RootVector, bool> seen;
  std::queue<RootVector> queue;
  for (int i = 1; i <= n; ++i) {
    RootVector simple(n, 0);
    simple[i - 1] = 1;
    seen[simple] = true;
    queue.push(simple);
  }
  // Closure under "reflect and keep if positive".
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop();
    for (int i = 1; i <= n; ++i) {
      RootVector w = reflect(i, v);
      if (std::any_of(w.begin(), w.end(), [](long long c) { return c < 0; })) continue;
      if (seen.emplace(w, true).second) queue.push(w);
    }
  }
  positive_.reserve(seen.size());
  for (auto& [root, _] : seen) positive_.push_back(root);
  std::sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    const long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    const long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(positive_.size()); ++i) positive_index_[positive_[i]] = i;
}

bool RootSystem::is_positive_root(const RootVector& v) const {
  return positive_index_.count(v) != 0;
}

bool RootSystem::is_root(const RootVector& v) const {
  if (is_positive_root(v)) return true;
  RootVector neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](long long c) { return -c; });
  return is_positive_root(neg);
}

RootVector RootSystem::reflect(int node, const RootVector& v) const {
  diagram_.check_node(node);
  if (static_cast<int>(v.size()) != diagram_.rank)
    throw DomainError("vector has wrong length for diagram " + diagram_.name);
  RootVector out = v;
  long long adjacent_sum = 0;
  for (int nb : diagram_.adj[node]) adjacent_sum += v[nb - 1];
  out[node - 1] = -v[node - 1] + adjacent_sum;
  return out;
}

WeylElement RootSystem::make_element(IntMat mat, IntMat inv) const {
  WeylElement w;
  w.length = length_of(mat);
  w.mat = std::move(mat);
  w.inv = std::move(inv);
  return w;
}

WeylElement RootSystem::identity_element() const {
  IntMat id = IntMat::identity(diagram_.rank);
  return make_element(id, id);
}

WeylElement RootSystem::simple_reflection(int node) const {
  diagram_.check_node(node);
  IntMat m = IntMat::identity(diagram_.rank);
  const int r = node - 1;
  m.at(r, r) = -1;
  for (int nb : diagram_.adj[node]) m.at(r, nb - 1) = 1;
  return make_element(m, m);
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
  return make_element(a.mat * b.mat, b.inv * a.inv);
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  return make_element(w.inv, w.mat);
}

RootVector RootSystem::apply(const WeylElement& w, const RootVector& v) const {
  return w.mat.apply(v);
}

std::vector<long long> RootSystem::apply_dual(const WeylElement& w,
                                              const std::vector<long long>& theta) const {
  return w.inv.transposed().apply(theta);
}

int RootSystem::length_of(const IntMat& m) const {
  int count = 0;
  for (const auto& root : positive_) {
    const auto image = m.apply(root);
    if (std::any_of(image.begin(), image.end(), [](long long c) { return c < 0; })) ++count;
  }
  return count;
}

WeylElement RootSystem::longest_element(const NodeSet& gamma) const {
  for (int i : gamma.members()) diagram_.check_node(i);
  WeylElement w = identity_element();
  for (;;) {
    bool advanced = false;
    for (int i : gamma.members()) {
      WeylElement next = compose(w, simple_reflection(i));
      if (next.length > w.length) {
        w = std::move(next);
        advanced = true;
        break;
      }
    }
    if (!advanced) return w;
  }
}

int RootSystem::dynkin_involution_at(const NodeSet& gamma, int j) const {
  if (!gamma.contains(j))
    throw DomainError("dynkin involution: node " + std::to_string(j) + " not in subset");
  const WeylElement longest = longest_element(gamma);
  RootVector alpha(diagram_.rank, 0);
  alpha[j - 1] = 1;
  const RootVector image = apply(longest, alpha);
  int found = 0;
  for (int k = 1; k <= diagram_.rank; ++k) {
    if (image[k - 1] == -1)
      found = k;
    else if (image[k - 1] != 0)
      throw InconsistencyError("longest element did not send a simple root to minus a simple root");
  }
  if (found == 0) throw InconsistencyError("dynkin involution image not found");
  return found;
}

std::map<int, int> RootSystem::dynkin_involution(const NodeSet& gamma) const {
  const WeylElement longest = longest_element(gamma);
  std::map<int, int> out;
  for (int j : gamma.members()) {
    RootVector alpha(diagram_.rank, 0);
    alpha[j - 1] = 1;
    const RootVector image = apply(longest, alpha);
    int found = 0;
    for (int k = 1; k <= diagram_.rank; ++k)
      if (image[k - 1] == -1) found = k;
    if (found == 0) throw InconsistencyError("dynkin involution image not found");
    out[j] = found;
  }
  return out;
}

bool RootSystem::in_parabolic(const WeylElement& w, const NodeSet& j) const {
  std::vector<long long> theta(diagram_.rank, 0);
  for (int i = 1; i <= diagram_.rank; ++i)
    if (!j.contains(i)) theta[i - 1] = 1;
  return apply_dual(w, theta) == theta;
}

std::vector<std::vector<int>> RootSystem::components(const NodeSet& gamma) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> visited(diagram_.rank + 1, false);
  for (int start : gamma.members()) {
    if (visited[start]) continue;
    std::vector<int> component;
    std::queue<int> queue;
    queue.push(start);
    visited[start] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      component.push_back(v);
      for (int nb : diagram_.adj[v])
        if (gamma.contains(nb) && !visited[nb]) {
          visited[nb] = true;
          queue.push(nb);
        }
    }
    std::sort(component.begin(), component.end());
    out.push_back(std::move(component));
  }
  return out;
}

std::string RootSystem::classify_component(const std::vector<int>& component) const {
  const int n = static_cast<int>(component.size());
  auto degree = [&](int v) {
    int d = 0;
    for (int nb : diagram_.adj[v])
      if (std::binary_search(component.begin(), component.end(), nb)) ++d;
    return d;
  };
  int branch = 0;
  for (int v : component)
    if (degree(v) >= 3) {
      if (branch != 0) throw InconsistencyError("subdiagram has two branch nodes");
      branch = v;
    }
  if (branch == 0) return "A" + std::to_string(n);
  // Arm lengths away from the branch node.
  std::vector<int> arms;
  for (int nb : diagram_.adj[branch]) {
    if (!std::binary_search(component.begin(), component.end(), nb)) continue;
    int len = 0;
    int prev = branch, cur = nb;
    while (true) {
      ++len;
      int next = 0;
      for (int w : diagram_.adj[cur])
        if (w != prev && std::binary_search(component.begin(), component.end(), w)) next = w;
      if (next == 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) throw InconsistencyError("branch node without three arms");
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  throw InconsistencyError("induced subdiagram is not ADE");
}

std::string RootSystem::classify_subset(const NodeSet& gamma) const {
  if (gamma.empty()) return "-";
  std::string out;
  for (const auto& component : components(gamma)) {
    if (!out.empty()) out += "+";
    out += classify_component(component);
  }
  return out;
}

unsigned long long RootSystem::weyl_order(const NodeSet& gamma) const {
  auto factorial = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  unsigned long long order = 1;
  for (const auto& component : components(gamma)) {
    const std::string kind = classify_component(component);
    const int n = static_cast<int>(component.size());
    if (kind[0] == 'A')
      order *= factorial(n + 1);
    else if (kind[0] == 'D')
      order *= factorial(n) << (n - 1);
    else if (kind == "E6")
      order *= 51840ULL;
    else if (kind == "E7")
      order *= 2903040ULL;
    else
      order *= 696729600ULL;
  }
  return order;
}

} // namespace flopcalc
