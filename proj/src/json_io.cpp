#include "flopcalc/json_io.hpp"

#include <sstream>

namespace flopcalc {

Json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" string or integer");
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rat> out;
  for (const auto& item : j) out.push_back(rat_from_json(item));
  return out;
}

Json node_set_to_json(const NodeSet& s) { return Json(s.members()); }

NodeSet node_set_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a subset as an array of node ids");
  std::vector<int> members;
  for (const auto& item : j) {
    if (!item.is_number_integer()) throw ParseError("subset entries must be integers");
    members.push_back(item.get<int>());
  }
  return NodeSet(std::move(members));
}

Json int_mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.n; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat int_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a matrix as an array of rows");
  IntMat m(static_cast<int>(j.size()));
  for (int r = 0; r < m.n; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != m.n)
      throw ParseError("matrix rows must all have the matrix dimension");
    for (int c = 0; c < m.n; ++c) m.at(r, c) = row[c].get<long long>();
  }
  return m;
}

Json class_to_json(const RestrictedClass& c) { return Json(c); }

RestrictedClass class_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a curve class as an integer array");
  RestrictedClass out;
  for (const auto& item : j) out.push_back(item.get<long long>());
  return out;
}

Json arrangement_to_json(const EnhancedArrangement& a) {
  Json out;
  out["subset"] = node_set_to_json(a.subset);
  out["curves"] = a.curves;
  Json rays = Json::array();
  for (const auto& ray : a.rays) {
    Json r;
    r["primitive"] = class_to_json(ray.primitive);
    r["multiplicities"] = ray.multiplicities;
    rays.push_back(std::move(r));
  }
  out["rays"] = std::move(rays);
  return out;
}

namespace {

Json gv_value_to_json(const Int& v) {
  if (v <= Int(std::numeric_limits<long long>::max()))
    return static_cast<long long>(v);
  std::ostringstream os;
  os << v;
  return os.str();
}

Int gv_value_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("GV values must be integers (or strings for big values)");
}

} // namespace

Json gv_table_to_json(const GVTable& t) {
  Json out;
  out["diagram"] = t.ambient.diagram;
  out["subset"] = node_set_to_json(t.ambient.subset);
  // The frame is ascending exactly when the curve list is sorted; only a
  // transported table needs the explicit field.
  if (!std::is_sorted(t.ambient.curves.begin(), t.ambient.curves.end()))
    out["curves"] = t.ambient.curves;
  Json entries = Json::array();
  for (const auto& [beta, value] : t.entries) {
    Json e;
    e["class"] = class_to_json(beta);
    e["n"] = gv_value_to_json(value);
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

GVTable gv_table_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("diagram") || !j.contains("subset") || !j.contains("entries"))
    throw ParseError("GV table needs \"diagram\", \"subset\" and \"entries\" fields");
  const RootSystem rs(parse_diagram(j.at("diagram").get<std::string>()));
  GVTable table;
  table.ambient = Ambient::initial(rs, node_set_from_json(j.at("subset")));
  if (j.contains("curves")) {
    std::vector<int> curves;
    for (const auto& item : j.at("curves")) curves.push_back(item.get<int>());
    if (curves.size() != table.ambient.curves.size())
      throw ParseError("\"curves\" must list one node per curve");
    table.ambient.curves = std::move(curves);
  }
  for (const auto& entry : j.at("entries")) {
    const RestrictedClass beta = class_from_json(entry.at("class"));
    if (static_cast<int>(beta.size()) != table.ambient.dim())
      throw ParseError("GV entry class has the wrong dimension");
    table.entries[beta] = gv_value_from_json(entry.at("n"));
  }
  check_table(rs, table);
  return table;
}

std::string gv_table_to_string(const GVTable& t) { return gv_table_to_json(t).dump(2) + "\n"; }

GVTable gv_table_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return gv_table_from_json(j);
}

Json flop_step_to_json(const FlopStep& s) {
  Json out;
  out["subset"] = node_set_to_json(s.source_subset);
  out["at"] = s.node;
  out["target"] = node_set_to_json(s.target_subset);
  out["new_node"] = s.new_node;
  out["M"] = int_mat_to_json(s.matrix.forward);
  out["M_inverse"] = int_mat_to_json(s.matrix.inverse);
  out["N"] = int_mat_to_json(s.matrix.dual);
  return out;
}

Json chamber_graph_to_json(const ChamberGraph& g) {
  Json out;
  out["diagram"] = g.diagram;
  out["subset"] = node_set_to_json(g.subset);
  out["count"] = g.vertices.size();
  Json vertices = Json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& chamber = g.vertices[v];
    Json jv;
    jv["id"] = v;
    jv["subset"] = node_set_to_json(chamber.subset);
    jv["curves"] = chamber.ambient.curves;
    jv["labels"] = chamber.ambient.labels;
    jv["rep_length"] = chamber.rep.length;
    jv["comparison"] = int_mat_to_json(chamber.comparison);
    vertices.push_back(std::move(jv));
  }
  out["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& edge : g.edges) {
    Json je;
    je["from"] = edge.from;
    je["to"] = edge.to;
    je["at"] = edge.step.node;
    je["label"] = edge.step.coord >= 0 ? Json(g.vertices[edge.from].ambient.labels[edge.step.coord])
                                       : Json(nullptr);
    je["new_node"] = edge.step.new_node;
    edges.push_back(std::move(je));
  }
  out["edges"] = std::move(edges);
  return out;
}

std::string chamber_graph_to_dot(const ChamberGraph& g) {
  std::ostringstream os;
  os << "graph chambers {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  c" << v << " [label=\"(";
    const auto& members = g.vertices[v].subset.members();
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << members[i];
    os << " | l=" << g.vertices[v].rep.length << ")\"];\n";
  }
  for (const auto& edge : g.edges) // each wall appears once from either side
    if (edge.from < edge.to)
      os << "  c" << edge.from << " -- c" << edge.to << " [label=\"" << edge.step.node << "\"];\n";
  os << "}\n";
  return os.str();
}

Json lemma_report_to_json(const LemmaReport& r) {
  Json out;
  out["check"] = "restriction-lemma";
  out["roots_considered"] = r.roots_considered;
  out["pairs_checked"] = r.pairs_checked;
  out["orbit_count"] = r.orbit_count;
  Json violations = Json::array();
  for (const auto& [a, b] : r.violations) {
    Json v;
    v["alpha"] = a;
    v["alpha_prime"] = b;
    violations.push_back(std::move(v));
  }
  out["violations"] = std::move(violations);
  out["ok"] = r.ok();
  return out;
}

Json flop_matrix_report_to_json(const FlopMatrixReport& r) {
  Json out;
  out["check"] = "flop-matrix";
  out["recomputed"] = int_mat_to_json(r.recomputed);
  out["matches_fast_path"] = r.matches_fast_path;
  out["column_structure_ok"] = r.column_structure_ok;
  out["sign_dichotomy_ok"] = r.sign_dichotomy_ok;
  out["bijection_ok"] = r.bijection_ok;
  out["ok"] = r.ok();
  return out;
}

Json chamber_report_to_json(const ChamberReport& r) {
  Json out;
  out["check"] = "chamber-count";
  out["count"] = r.count;
  if (r.expected) out["expected"] = *r.expected;
  out["ok"] = r.ok();
  return out;
}

} // namespace flopcalc
