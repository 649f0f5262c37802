#include "flopcalc/presets.hpp"

namespace flopcalc {

GVTable make_cA2_table(long long k) {
  if (k < 1) throw DomainError("cA2 preset needs k >= 1");
  const RootSystem rs(parse_diagram("A2"));
  GVTable table;
  table.ambient = Ambient::initial(rs, NodeSet());
  table.entries[{1, 0}] = 1;
  table.entries[{0, 1}] = 1;
  table.entries[{1, 1}] = Int(k);
  return table;
}

std::pair<std::string, NodeSet> single_curve_ambient(int length) {
  // The node whose coefficient in the highest root equals the length; its
  // complement is contracted, leaving a single curve.
  switch (length) {
    case 1: return {"A1", NodeSet(std::vector<int>{})};
    case 2: return {"D4", NodeSet(std::vector<int>{1, 3, 4})};
    case 3: return {"E6", NodeSet(std::vector<int>{1, 2, 3, 5, 6})};
    case 4: return {"E7", NodeSet(std::vector<int>{1, 2, 3, 5, 6, 7})};
    case 5: return {"E8", NodeSet(std::vector<int>{1, 2, 3, 4, 6, 7, 8})};
    case 6: return {"E8", NodeSet(std::vector<int>{1, 2, 3, 5, 6, 7, 8})};
    default: throw DomainError("single-curve preset needs length in 1..6");
  }
}

GVTable make_single_curve_table(int length) {
  const auto [diagram, subset] = single_curve_ambient(length);
  const RootSystem rs(parse_diagram(diagram));
  GVTable table;
  table.ambient = Ambient::initial(rs, subset);
  for (const auto& beta : restricted_positive_roots(rs, subset)) table.entries[beta] = 1;
  return table;
}

} // namespace flopcalc
