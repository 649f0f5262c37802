#pragma once

#include <json.hpp>

#include <string>

#include "flopcalc/enumerative.hpp"
#include "flopcalc/oracle.hpp"
#include "flopcalc/restriction.hpp"
#include "flopcalc/wallcross.hpp"

namespace flopcalc {

// Insertion-ordered documents keep serialisation byte-deterministic.
using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);                 // "p/q" string (plain "p" when integral)
Rat rat_from_json(const Json& j);               // accepts string or integer
std::vector<Rat> rat_vector_from_json(const Json& j);

Json node_set_to_json(const NodeSet& s);        // sorted array of 1-based ids
NodeSet node_set_from_json(const Json& j);

Json int_mat_to_json(const IntMat& m);          // array of row arrays
IntMat int_mat_from_json(const Json& j);

Json class_to_json(const RestrictedClass& c);
RestrictedClass class_from_json(const Json& j);

Json arrangement_to_json(const EnhancedArrangement& a);

/// {"diagram":..., "subset":[...], "entries":[{"class":[...],"n":...}, ...]}
/// plus a "curves" field whenever the frame differs from the ascending
/// complement (it round-trips; absent means ascending).
Json gv_table_to_json(const GVTable& t);
GVTable gv_table_from_json(const Json& j);
std::string gv_table_to_string(const GVTable& t); // canonical indented dump + newline
GVTable gv_table_from_string(const std::string& text);

Json flop_step_to_json(const FlopStep& s);

Json chamber_graph_to_json(const ChamberGraph& g);
std::string chamber_graph_to_dot(const ChamberGraph& g);

Json lemma_report_to_json(const LemmaReport& r);
Json flop_matrix_report_to_json(const FlopMatrixReport& r);
Json chamber_report_to_json(const ChamberReport& r);

} // namespace flopcalc
