// plumbfill: resolution graphs -> germs -> planar Lefschetz fibrations ->
// homology invariants -> arrangement certificates.  JSON in, JSON out.

#include "json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace plumbfill;

namespace {

constexpr int EXIT_MALFORMED = 1;
constexpr int EXIT_VALIDATION = 2;
constexpr int EXIT_INCONCLUSIVE = 3;

struct Options {
  std::string input;
  std::string output;
  std::string builtin;
  std::string format = "json";
  unsigned long long seed = 7;
  int trials = 32;
  int outer = 1;
  int column = 0;
  int grid_n = 4;
  int grid_k = 0;
};

std::string read_input(const Options& opt) {
  if (opt.input.empty() || opt.input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(opt.input);
  if (!in) throw std::runtime_error("cannot open input file: " + opt.input);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& opt, const json& j, const std::string& table) {
  std::string text = opt.format == "table" ? table : j.dump(2) + "\n";
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.output);
    out << text;
  }
}

json input_json(const Options& opt) { return parse_json_text(read_input(opt)); }

IncidenceStructure input_structure(const Options& opt) {
  if (!opt.builtin.empty())
    return builtin_structure(opt.builtin, opt.grid_n, opt.grid_k);
  return structure_from_json(input_json(opt));
}

int cmd_validate_graph(const Options& opt) {
  auto g = graph_from_json(input_json(opt));
  auto report = validate_reduced_cycle(g);
  json out = validation_to_json(report);
  if (report.all_ok()) {
    auto fc = fundamental_cycle(g);
    out["multiplicity"] = fc.multiplicity;
  }
  std::ostringstream t;
  t << "tree: " << report.is_tree
    << "\nnegative_definite: " << report.negative_definite
    << "\nreduced_cycle: " << report.reduced_cycle << "\n";
  emit(opt, out, t.str());
  return report.all_ok() ? 0 : EXIT_VALIDATION;
}

int cmd_germ(const Options& opt) {
  auto g = graph_from_json(input_json(opt));
  auto exts = enumerate_extensions(g);
  if (opt.outer < 1 || opt.outer > static_cast<int>(exts.size()))
    throw std::domain_error("--outer out of range (graph has " +
                            std::to_string(exts.size()) + " extensions)");
  auto germ = derive_germ(exts[opt.outer - 1]);
  emit(opt, germ_to_json(germ), "m = " + std::to_string(germ.m) + "\n");
  return 0;
}

int cmd_extensions(const Options& opt) {
  auto g = graph_from_json(input_json(opt));
  auto exts = enumerate_extensions(g);
  json list = json::array();
  for (const auto& e : exts) {
    json leaves = json::array();
    for (auto [attached, leaf] : e.leaves) leaves.push_back({attached, leaf});
    list.push_back({{"root", e.root_id}, {"leaves", leaves}});
  }
  json out = {{"count", static_cast<int>(exts.size())}, {"extensions", list}};
  emit(opt, out, std::to_string(exts.size()) + " extensions\n");
  return 0;
}

int cmd_scott(const Options& opt) {
  auto germ = germ_from_json(input_json(opt));
  auto res = scott_deformation(germ);
  json cycles = json::array();
  for (const auto& c : res.fibration.cycles) cycles.push_back(curve_to_json(c));
  json out = {{"laminar", laminar_to_json(res.family)},
              {"cycles", cycles},
              {"matrix", matrix_to_json(res.matrix)}};
  emit(opt, out,
       std::to_string(res.fibration.cycles.size()) + " vanishing cycles\n");
  return 0;
}

int cmd_gay_mark(const Options& opt) {
  auto g = graph_from_json(input_json(opt));
  auto res = gay_mark(g, opt.outer);
  json cycles = json::array();
  for (const auto& c : res.fibration.cycles) cycles.push_back(curve_to_json(c));
  json out = {{"hole_order", res.hole_order},
              {"subsets", res.subsets},
              {"cycles", cycles},
              {"matrix", matrix_to_json(res.matrix)}};
  emit(opt, out,
       std::to_string(res.fibration.cycles.size()) + " vanishing cycles\n");
  return 0;
}

int cmd_wiring_to_lefschetz(const Options& opt) {
  auto w = wiring_from_json(input_json(opt));
  auto cycles = vanishing_cycles(w);
  LefschetzFibration fib{w.strands, cycles};
  json jcycles = json::array();
  for (const auto& c : cycles) jcycles.push_back(curve_to_json(c));
  json out = {{"m", w.strands},
              {"cycles", jcycles},
              {"matrix", matrix_to_json(incidence_matrix(fib))}};
  emit(opt, out, std::to_string(cycles.size()) + " vanishing cycles\n");
  return 0;
}

int cmd_invariants(const Options& opt) {
  auto m = matrix_from_json(input_json(opt));
  auto inv = invariants(m);
  std::ostringstream t;
  t << "h2_rank: " << inv.h2_rank << "\neuler: " << inv.euler
    << "\nb1_zero: " << inv.b1_zero << "\n";
  emit(opt, invariants_to_json(inv), t.str());
  return 0;
}

int cmd_compare_monodromy(const Options& opt) {
  auto w = wiring_from_json(input_json(opt));
  auto cycles = vanishing_cycles(w);
  auto product = product_record(w.strands, cycles);
  auto circum = circumnavigation_monodromy(w);
  bool ok = records_equal(product, circum);
  json out = {{"identity_holds", ok},
              {"record", record_to_json(product)}};
  emit(opt, out, ok ? "IDENTITY HOLDS\n" : "IDENTITY FAILS\n");
  return ok ? 0 : EXIT_VALIDATION;
}

int cmd_lantern(const Options& opt) {
  auto m = matrix_from_json(input_json(opt));
  auto out_m = lantern_substitute(m, opt.column);
  emit(opt, matrix_to_json(out_m),
       std::to_string(out_m.m) + " x " + std::to_string(out_m.n) + "\n");
  return 0;
}

int cmd_artin_recognize(const Options& opt) {
  auto m = matrix_from_json(input_json(opt));
  std::vector<std::vector<int>> family;
  for (int j = 0; j < m.n; ++j) family.push_back(m.column(j));
  auto g = artin_recognize(m.m, family);
  emit(opt, graph_to_json(g), std::to_string(g.size()) + " vertices\n");
  return 0;
}

int cmd_certify(const Options& opt) {
  auto s = input_structure(opt);
  auto res = unexpected_certify(s, opt.trials, opt.seed);
  json out = certify_to_json(res);
  std::string verdict = out["verdict"].get<std::string>();
  emit(opt, out, verdict + "\n");
  return res.verdict == CertifyResult::Verdict::INCONCLUSIVE
             ? EXIT_INCONCLUSIVE
             : 0;
}

int cmd_bundle_extend(const Options& opt) {
  // Input: {"weights":[...], "trees":[graph-or-null,...], "structure":optional}
  auto j = input_json(opt);
  if (!j.contains("weights")) throw std::domain_error("json: missing \"weights\"");
  std::vector<int> weights = j.at("weights").get<std::vector<int>>();
  std::vector<std::optional<PlumbingGraph>> trees(weights.size());
  if (j.contains("trees")) {
    const auto& jt = j.at("trees");
    if (jt.size() != weights.size())
      throw std::domain_error("json: one tree entry per line required");
    for (size_t i = 0; i < weights.size(); ++i)
      if (!jt[i].is_null()) trees[i] = graph_from_json(jt[i]);
  }
  std::optional<IncidenceStructure> structure;
  if (j.contains("structure"))
    structure = structure_from_json(j.at("structure"));
  auto res = bundle_extend(weights, trees, structure ? &*structure : nullptr);
  json out = {{"germ", germ_to_json(res.germ)},
              {"graph", graph_to_json(res.graph)},
              {"curve_line", res.curve_line},
              {"curve_carrier", res.curve_carrier},
              {"points", res.points},
              {"free_counts", res.free_counts}};
  emit(opt, out, std::to_string(res.germ.m) + " curves\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plumbing graphs, planar Lefschetz fibrations and arrangement "
               "certificates"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub, bool wants_input) {
    if (wants_input)
      sub->add_option("--input,input", opt.input,
                      "input JSON file (default: stdin)");
    sub->add_option("--output", opt.output, "output file (default: stdout)");
    sub->add_option("--format", opt.format, "json|table")
        ->check(CLI::IsMember({"json", "table"}));
    return sub;
  };

  std::map<std::string, std::function<int(const Options&)>> handlers;
  auto reg = [&](const std::string& name, const std::string& help,
                 std::function<int(const Options&)> fn, bool wants_input = true) {
    auto* sub = add_common(app.add_subcommand(name, help), wants_input);
    handlers[name] = std::move(fn);
    return sub;
  };

  reg("validate-graph", "check tree/negative-definite/reduced-cycle",
      cmd_validate_graph);
  reg("germ", "decorated germ of one extension of a graph", cmd_germ)
      ->add_option("--outer", opt.outer, "1-based extension choice");
  reg("extensions", "enumerate the extensions of a graph", cmd_extensions);
  reg("scott", "nested vanishing-cycle factorization of a germ", cmd_scott);
  reg("gay-mark", "fibration read directly off a graph", cmd_gay_mark)
      ->add_option("--outer", opt.outer, "1-based outer slot choice");
  reg("wiring-to-lefschetz", "vanishing cycles of a wiring diagram",
      cmd_wiring_to_lefschetz);
  reg("invariants", "homology invariants of an incidence matrix",
      cmd_invariants);
  reg("compare-monodromy", "product-of-twists vs circumnavigation",
      cmd_compare_monodromy);
  reg("lantern", "lantern substitution on a matrix column", cmd_lantern)
      ->add_option("--column", opt.column, "0-based weight-3 column");
  reg("artin-recognize", "reconstruct a graph from nested cycles",
      cmd_artin_recognize);
  {
    auto* sub = reg("certify-unexpected", "unexpectedness certificate",
                    cmd_certify);
    sub->add_option("--builtin", opt.builtin,
                    "pappus_P|orevkov_Q|pseudo_pappus|grid_Qk");
    sub->add_option("--seed", opt.seed, "random seed (u64)");
    sub->add_option("--trials", opt.trials, "realizability trials")
        ->default_val(32);
    sub->add_option("--grid-n", opt.grid_n, "grid_Qk: N parameter");
    sub->add_option("--grid-k", opt.grid_k, "grid_Qk: k parameter");
  }
  reg("bundle-extend", "replace pencil lines by curve bundles",
      cmd_bundle_extend);

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  try {
    return handlers.at(command)(opt);
  } catch (const json_parse_error& e) {
    std::cerr << "malformed JSON at line " << e.line << ", column " << e.column
              << ": " << e.what() << "\n";
    return EXIT_MALFORMED;
  } catch (const structure_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return EXIT_VALIDATION;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return EXIT_VALIDATION;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_VALIDATION;
  }
}
