// flopcalc: inspect ADE flop combinatorics, transport GV tables, evaluate
// quantum potentials, run the brute-force verifiers, and draw arrangements.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flopcalc/enumerative.hpp"
#include "flopcalc/json_io.hpp"
#include "flopcalc/oracle.hpp"
#include "flopcalc/plot.hpp"
#include "flopcalc/presets.hpp"
#include "flopcalc/rational.hpp"

namespace {

using namespace flopcalc;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitVerification = 3;

NodeSet parse_subset(const std::string& text) {
  std::vector<int> members;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      members.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad subset entry '" + item + "' (expected node ids like 1,2,4)");
    }
  }
  return NodeSet(std::move(members));
}

std::vector<int> parse_path(const std::string& text) {
  std::vector<int> path;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      path.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad path entry '" + item + "'");
    }
  }
  return path;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_rat(item));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::optional<std::string>& path, const std::string& content) {
  if (!path) {
    std::cout << content;
    return;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) throw DomainError("cannot write file: " + *path);
  out << content;
}

// --table accepts a file path or an inline preset: cA2:<k> / single-curve:<l>.
GVTable load_table(const std::string& spec) {
  if (spec.rfind("cA2:", 0) == 0) return make_cA2_table(std::stoll(spec.substr(4)));
  if (spec.rfind("single-curve:", 0) == 0)
    return make_single_curve_table(std::stoi(spec.substr(13)));
  return gv_table_from_string(read_file(spec));
}

std::size_t chamber_limit_from_env(std::size_t fallback) {
  if (const char* env = std::getenv("FLOPCALC_LIMIT")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError("FLOPCALC_LIMIT must be a positive integer");
    }
  }
  return fallback;
}

DivisorVector divisor_from(const std::string& text, int dim) {
  DivisorVector g;
  g.coeffs = parse_rat_list(text);
  if (static_cast<int>(g.coeffs.size()) != dim)
    throw DomainError("divisor vector needs " + std::to_string(dim) + " coordinates");
  return g;
}

struct SubsetArgs {
  std::string diagram;
  std::string subset_text;
};

void add_subset_options(CLI::App* cmd, SubsetArgs& args, bool required) {
  cmd->add_option("diagram", args.diagram, "diagram spec, e.g. A3, D5, E8")->required();
  auto* opt = cmd->add_option("--subset", args.subset_text,
                              "contracted nodes, e.g. 1,2,4 (use \"\" for the empty set)");
  if (required) opt->required();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact flop calculus on ADE Dynkin data"};
  app.require_subcommand(1);
  app.fallthrough(); // let --json appear after the subcommand
  bool json_errors = false;
  app.add_flag("--json", json_errors, "machine-readable output and errors");

  // roots
  SubsetArgs roots_args;
  auto* cmd_roots = app.add_subcommand("roots", "positive or restricted positive roots");
  add_subset_options(cmd_roots, roots_args, false);

  // arrangement
  SubsetArgs arr_args;
  auto* cmd_arr = app.add_subcommand("arrangement", "enhanced finite arrangement");
  add_subset_options(cmd_arr, arr_args, true);

  // chambers
  SubsetArgs ch_args;
  std::size_t ch_limit = kDefaultChamberLimit;
  bool ch_dot = false;
  auto* cmd_ch = app.add_subcommand("chambers", "chamber graph of Theta_I");
  add_subset_options(cmd_ch, ch_args, true);
  cmd_ch->add_option("--limit", ch_limit, "vertex budget");
  cmd_ch->add_flag("--dot", ch_dot, "emit DOT instead of JSON");

  // flop
  SubsetArgs flop_args;
  int flop_at = 0;
  auto* cmd_flop = app.add_subcommand("flop", "wall crossing and flop matrices at one curve");
  add_subset_options(cmd_flop, flop_args, true);
  cmd_flop->add_option("--at", flop_at, "curve to flop (node id in I^c)")->required();

  // gv-track
  std::string track_table, track_path;
  std::optional<std::string> track_out;
  bool track_trace = false;
  auto* cmd_track = app.add_subcommand("gv-track", "transport a GV table along a flop path");
  cmd_track->add_option("--table", track_table, "GV table file or preset (cA2:<k>, single-curve:<l>)")
      ->required();
  cmd_track->add_option("--path", track_path, "curves to flop, e.g. 8,2 (current node ids)")
      ->required();
  cmd_track->add_option("--out", track_out, "write the final table here");
  cmd_track->add_flag("--trace", track_trace, "print every intermediate table");

  // dim
  std::string dim_table;
  std::optional<int> dim_mutate;
  auto* cmd_dim = app.add_subcommand("dim", "contraction-algebra dimension");
  cmd_dim->add_option("--table", dim_table, "GV table file or preset")->required();
  cmd_dim->add_option("--mutate", dim_mutate, "dimension after mutation at this curve");

  // qp
  std::string qp_table, qp_g1, qp_g2, qp_g3, qp_point;
  bool qp_ctc = false;
  int qp_at = 0;
  auto* cmd_qp = app.add_subcommand("qp", "evaluate the quantum potential");
  cmd_qp->add_option("--table", qp_table, "GV table file or preset")->required();
  cmd_qp->add_option("--gamma1", qp_g1, "first divisor insertion, e.g. 1,1/2")->required();
  cmd_qp->add_option("--gamma2", qp_g2, "second divisor insertion")->required();
  cmd_qp->add_option("--gamma3", qp_g3, "third divisor insertion")->required();
  cmd_qp->add_option("--q", qp_point, "Novikov point, e.g. 1/3,1/5")->required();
  cmd_qp->add_flag("--check-ctc", qp_ctc, "check the flop identity instead (needs --at)");
  cmd_qp->add_option("--at", qp_at, "curve for --check-ctc");

  // verify
  SubsetArgs ver_args;
  std::string ver_check;
  int ver_at = 0;
  std::size_t ver_limit = kDefaultChamberLimit;
  std::optional<unsigned long long> ver_expect;
  auto* cmd_ver = app.add_subcommand("verify", "brute-force verifiers (lemma|matrix|chambers)");
  cmd_ver->add_option("check", ver_check, "one of: lemma, matrix, chambers")->required();
  add_subset_options(cmd_ver, ver_args, true);
  cmd_ver->add_option("--at", ver_at, "curve for the matrix check");
  cmd_ver->add_option("--limit", ver_limit, "vertex budget for the chamber check");
  cmd_ver->add_option("--expect", ver_expect, "expected chamber count");

  // plot
  SubsetArgs plot_args;
  std::string plot_kind;
  std::optional<std::string> plot_out;
  std::string plot_window;
  std::size_t plot_limit = kDefaultChamberLimit;
  bool plot_no_labels = false;
  auto* cmd_plot = app.add_subcommand("plot", "SVG renderings (finite|infinite|regions)");
  cmd_plot->add_option("kind", plot_kind, "one of: finite, infinite, regions")->required();
  add_subset_options(cmd_plot, plot_args, true);
  cmd_plot->add_option("--out", plot_out, "output file (stdout if omitted)");
  cmd_plot->add_option("--window", plot_window, "xmin,xmax,ymin,ymax as rationals");
  cmd_plot->add_option("--limit", plot_limit, "chamber budget for regions");
  cmd_plot->add_flag("--no-labels", plot_no_labels, "suppress multiplicity labels");

  // preset
  std::string preset_name;
  long long preset_k = 1;
  int preset_length = 1;
  std::optional<std::string> preset_out;
  auto* cmd_preset = app.add_subcommand("preset", "write a named GV table preset");
  cmd_preset->add_option("name", preset_name, "cA2 or single-curve")->required();
  cmd_preset->add_option("--k", preset_k, "cA2 parameter k");
  cmd_preset->add_option("--length", preset_length, "single-curve length 1..6");
  cmd_preset->add_option("--out", preset_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_roots) {
      const RootSystem rs(parse_diagram(roots_args.diagram));
      if (cmd_roots->count("--subset") == 0) {
        if (json_errors) {
          Json out = Json::array();
          for (const auto& root : rs.positive_roots()) out.push_back(root);
          std::cout << out.dump(2) << "\n";
        } else {
          for (const auto& root : rs.positive_roots()) {
            for (std::size_t i = 0; i < root.size(); ++i) std::cout << (i ? " " : "") << root[i];
            std::cout << "\n";
          }
        }
      } else {
        const NodeSet subset = parse_subset(roots_args.subset_text);
        const auto restricted = restricted_positive_roots(rs, subset);
        if (json_errors) {
          Json out = Json::array();
          for (const auto& beta : restricted) out.push_back(beta);
          std::cout << out.dump(2) << "\n";
        } else {
          for (const auto& beta : restricted) {
            for (std::size_t i = 0; i < beta.size(); ++i) std::cout << (i ? " " : "") << beta[i];
            std::cout << "\n";
          }
        }
      }
    } else if (*cmd_arr) {
      const RootSystem rs(parse_diagram(arr_args.diagram));
      const auto arrangement = enhanced_arrangement(rs, parse_subset(arr_args.subset_text));
      std::cout << arrangement_to_json(arrangement).dump(2) << "\n";
    } else if (*cmd_ch) {
      const RootSystem rs(parse_diagram(ch_args.diagram));
      const auto graph = enumerate_chambers(rs, parse_subset(ch_args.subset_text),
                                            chamber_limit_from_env(ch_limit));
      if (ch_dot)
        std::cout << chamber_graph_to_dot(graph);
      else
        std::cout << chamber_graph_to_json(graph).dump(2) << "\n";
    } else if (*cmd_flop) {
      const RootSystem rs(parse_diagram(flop_args.diagram));
      const NodeSet subset = parse_subset(flop_args.subset_text);
      const FlopStep step = flop_step(rs, subset, flop_at);
      if (json_errors) {
        std::cout << flop_step_to_json(step).dump(2) << "\n";
      } else {
        std::cout << "omega_" << flop_at << "(I) = {";
        const auto& members = step.target_subset.members();
        for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << members[i];
        std::cout << "}  (new curve at node " << step.new_node << ")\n";
        std::cout << flop_step_to_json(step).dump(2) << "\n";
      }
    } else if (*cmd_track) {
      const GVTable start = load_table(track_table);
      const RootSystem rs(parse_diagram(start.ambient.diagram));
      GVTable table = start;
      for (int curve : parse_path(track_path)) {
        table = transform_gv(rs, table, curve);
        if (track_trace) std::cout << gv_table_to_string(table);
        if (!json_errors) {
          std::cerr << "flopped at " << curve << "; subset now {";
          const auto& members = table.ambient.subset.members();
          for (std::size_t i = 0; i < members.size(); ++i)
            std::cerr << (i ? "," : "") << members[i];
          std::cerr << "} (" << rs.classify_subset(table.ambient.subset) << ")\n";
        }
      }
      if (!track_trace || track_out) write_output(track_out, gv_table_to_string(table));
    } else if (*cmd_dim) {
      const GVTable table = load_table(dim_table);
      if (dim_mutate) {
        const RootSystem rs(parse_diagram(table.ambient.diagram));
        std::cout << dim_after_mutation(rs, table, *dim_mutate) << "\n";
      } else {
        std::cout << dim_contraction(table) << "\n";
      }
    } else if (*cmd_qp) {
      const GVTable table = load_table(qp_table);
      const RootSystem rs(parse_diagram(table.ambient.diagram));
      const int dim = table.ambient.dim();
      const DivisorVector g1 = divisor_from(qp_g1, dim);
      const DivisorVector g2 = divisor_from(qp_g2, dim);
      const DivisorVector g3 = divisor_from(qp_g3, dim);
      const NovikovPoint point(parse_rat_list(qp_point));
      if (qp_ctc) {
        if (cmd_qp->count("--at") == 0) throw DomainError("--check-ctc needs --at <curve>");
        const auto [lhs, rhs] = ctc_residual(rs, table, qp_at, g1, g2, g3, point);
        if (json_errors) {
          Json out;
          out["lhs"] = rat_to_json(lhs);
          out["rhs"] = rat_to_json(rhs);
          out["equal"] = lhs == rhs;
          std::cout << out.dump(2) << "\n";
        } else {
          std::cout << "lhs = " << rat_to_string(lhs) << "\nrhs = " << rat_to_string(rhs) << "\n";
        }
        if (lhs != rhs) return kExitVerification;
      } else {
        std::cout << rat_to_string(quantum_potential(table, g1, g2, g3, point)) << "\n";
      }
    } else if (*cmd_ver) {
      const RootSystem rs(parse_diagram(ver_args.diagram));
      const NodeSet subset = parse_subset(ver_args.subset_text);
      Json report;
      bool ok = false;
      if (ver_check == "lemma") {
        const auto result = verify_restriction_lemma(rs, subset);
        report = lemma_report_to_json(result);
        ok = result.ok();
      } else if (ver_check == "matrix") {
        if (cmd_ver->count("--at") == 0) throw DomainError("verify matrix needs --at <curve>");
        const auto result = verify_flop_matrix(rs, subset, ver_at);
        report = flop_matrix_report_to_json(result);
        ok = result.ok();
      } else if (ver_check == "chambers") {
        auto result = verify_chamber_count(rs, subset, chamber_limit_from_env(ver_limit));
        if (ver_expect) result.expected = *ver_expect;
        report = chamber_report_to_json(result);
        ok = result.ok();
      } else {
        throw ParseError("unknown verify check '" + ver_check + "'");
      }
      std::cout << report.dump(2) << "\n";
      if (!ok) return kExitVerification;
    } else if (*cmd_plot) {
      const RootSystem rs(parse_diagram(plot_args.diagram));
      const NodeSet subset = parse_subset(plot_args.subset_text);
      PlotSpec spec;
      spec.labels = !plot_no_labels;
      if (!plot_window.empty()) {
        const auto window = parse_rat_list(plot_window);
        if (window.size() != 4) throw DomainError("--window needs xmin,xmax,ymin,ymax");
        spec.xmin = window[0];
        spec.xmax = window[1];
        spec.ymin = window[2];
        spec.ymax = window[3];
      }
      std::string svg;
      if (plot_kind == "finite")
        svg = render_finite(rs, subset, spec);
      else if (plot_kind == "infinite")
        svg = render_infinite(rs, subset, spec);
      else if (plot_kind == "regions")
        svg = render_fundamental_regions(rs, subset, spec, chamber_limit_from_env(plot_limit));
      else
        throw ParseError("unknown plot kind '" + plot_kind + "'");
      write_output(plot_out, svg);
    } else if (*cmd_preset) {
      GVTable table;
      if (preset_name == "cA2")
        table = make_cA2_table(preset_k);
      else if (preset_name == "single-curve")
        table = make_single_curve_table(preset_length);
      else
        throw ParseError("unknown preset '" + preset_name + "'");
      write_output(preset_out, gv_table_to_string(table));
    }
  } catch (const InconsistencyError& e) {
    if (json_errors)
      std::cout << Json{{"error", {{"type", "inconsistency"}, {"message", e.what()}}}}.dump(2)
                << "\n";
    else
      std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    if (json_errors)
      std::cout << Json{{"error", {{"type", "parse"}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    if (json_errors)
      std::cout << Json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
