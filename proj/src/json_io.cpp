#include "json_io.hpp"

#include <algorithm>

namespace plumbfill {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::domain_error("json: " + what);
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int need_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) out.push_back(need_int(e, what));
  return out;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; convert it to line/column.
    size_t pos = std::min(e.byte > 0 ? e.byte - 1 : 0, text.size());
    int line = 1, col = 1;
    for (size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw json_parse_error(e.what(), line, col);
  }
}

PlumbingGraph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> vertices;
  for (const auto& v : need(j, "vertices"))
    vertices.emplace_back(need_int(need(v, "id"), "id"),
                          need_int(need(v, "self_int"), "self_int"));
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : need(j, "edges")) {
    auto pair = int_array(e, "edge");
    if (pair.size() != 2) fail("edge must have two endpoints");
    edges.emplace_back(pair[0], pair[1]);
  }
  std::optional<int> root;
  if (j.contains("root") && !j.at("root").is_null())
    root = need_int(j.at("root"), "root");
  return make_graph(std::move(vertices), std::move(edges), root);
}

json graph_to_json(const PlumbingGraph& g) {
  json verts = json::array();
  for (int v = 0; v < g.size(); ++v)
    verts.push_back({{"id", g.ids[v]}, {"self_int", g.self_int[v]}});
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back({a, b});
  json out = {{"vertices", verts}, {"edges", edges}};
  if (g.root) out["root"] = *g.root;
  return out;
}

json validation_to_json(const ValidationReport& r) {
  return {{"is_tree", r.is_tree},
          {"negative_definite", r.negative_definite},
          {"reduced_cycle", r.reduced_cycle},
          {"violating_ids", r.violating_ids}};
}

DecoratedGerm germ_from_json(const json& j) {
  DecoratedGerm g;
  g.m = need_int(need(j, "m"), "m");
  g.weights = int_array(need(j, "weights"), "weights");
  for (const auto& row : need(j, "tangency"))
    g.tangency.push_back(int_array(row, "tangency row"));
  if (static_cast<int>(g.weights.size()) != g.m ||
      static_cast<int>(g.tangency.size()) != g.m)
    fail("germ sizes inconsistent with m");
  for (const auto& row : g.tangency)
    if (static_cast<int>(row.size()) != g.m) fail("tangency matrix not square");
  return g;
}

json germ_to_json(const DecoratedGerm& g) {
  return {{"m", g.m}, {"weights", g.weights}, {"tangency", g.tangency}};
}

BraidWord braid_from_json(const json& j, int strands) {
  BraidWord w;
  w.strands = strands;
  w.letters = int_array(j, "braid");
  std::reverse(w.letters.begin(), w.letters.end());  // functional -> application
  for (int l : w.letters)
    if (l == 0 || std::abs(l) >= strands) fail("braid letter out of range");
  return w;
}

json braid_to_json(const BraidWord& w) {
  std::vector<int> letters(w.letters.rbegin(), w.letters.rend());
  return letters;
}

Curve curve_from_json(const json& j) {
  Curve c;
  c.m = need_int(need(j, "m"), "m");
  c.beta = braid_from_json(need(j, "beta"), c.m);
  auto core = int_array(need(j, "core"), "core");
  if (core.size() != 2) fail("core must be [lo, hi]");
  c.lo = core[0];
  c.hi = core[1];
  if (c.lo < 1 || c.hi < c.lo || c.hi > c.m) fail("core block out of range");
  return c;
}

json curve_to_json(const Curve& c) {
  return {{"m", c.m}, {"beta", braid_to_json(c.beta)}, {"core", {c.lo, c.hi}}};
}

json record_to_json(const MappingClassRecord& r) {
  json factors = json::array();
  for (const auto& f : r.braid_part.factors) {
    std::vector<int> oneline;
    for (int x : f) oneline.push_back(x + 1);
    factors.push_back(oneline);
  }
  return {{"m", r.m},
          {"braid", {{"inf", r.braid_part.inf}, {"factors", factors}}},
          {"twists", r.twist_counts}};
}

WiringDiagram wiring_from_json(const json& j) {
  WiringDiagram w;
  w.strands = need_int(need(j, "strands"), "strands");
  for (const auto& e : need(j, "events")) {
    if (!e.is_object()) fail("event must be an object");
    if (e.contains("braid")) {
      w.events.push_back(
          WiringEvent::braid_event(braid_from_json(e.at("braid"), w.strands)));
    } else if (e.contains("point")) {
      auto block = int_array(e.at("point"), "point");
      if (block.size() != 2) fail("point must be [lo, hi]");
      w.events.push_back(WiringEvent::point_event(block[0], block[1]));
    } else {
      fail("event must have \"braid\" or \"point\"");
    }
  }
  validate_diagram(w);
  return w;
}

json wiring_to_json(const WiringDiagram& w) {
  json events = json::array();
  for (const auto& e : w.events) {
    if (e.is_point)
      events.push_back({{"point", {e.lo, e.hi}}});
    else
      events.push_back({{"braid", braid_to_json(e.braid)}});
  }
  return {{"strands", w.strands}, {"events", events}};
}

IncidenceMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) rows.push_back(int_array(row, "matrix row"));
  IncidenceMatrix m;
  m.m = static_cast<int>(rows.size());
  m.n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.n) fail("ragged matrix");
    for (int e : row)
      if (e != 0 && e != 1) fail("matrix entries must be 0/1");
  }
  m.rows = std::move(rows);
  return m;
}

json matrix_to_json(const IncidenceMatrix& i) { return i.rows; }

namespace {

json mpz_list(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

json invariants_to_json(const FillingInvariants& inv) {
  json torsion = json::array();
  for (const auto& t : inv.h1_torsion) torsion.push_back(t.get_si());
  json form = json::array();
  for (const auto& row : inv.intersection_form) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.get_str());
    form.push_back(r);
  }
  return {{"h1", {{"torsion", torsion}, {"rank", inv.h1_rank}}},
          {"h2_rank", inv.h2_rank},
          {"form", form},
          {"c1", mpz_list(inv.c1)},
          {"euler", inv.euler},
          {"b1_zero", inv.b1_zero},
          {"boundary_h1_torsion", mpz_list(inv.boundary_h1_torsion)}};
}

json laminar_to_json(const LaminarFamily& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks)
    blocks.push_back({{"level", b.level}, {"set", b.branches}});
  json free = json::array();
  for (auto [branch, count] : f.free_counts) free.push_back({branch, count});
  return {{"order", f.order}, {"blocks", blocks}, {"free", free}};
}

IncidenceStructure structure_from_json(const json& j) {
  IncidenceStructure s;
  s.lines = need_int(need(j, "lines"), "lines");
  for (const auto& p : need(j, "points")) {
    auto subset = int_array(p, "point");
    std::sort(subset.begin(), subset.end());
    s.points.push_back(subset);
  }
  if (j.contains("free"))
    for (const auto& f : j.at("free")) {
      auto single = int_array(f, "free point");
      if (single.size() != 1) fail("free point must be a singleton");
      s.free_points.push_back(single[0]);
    }
  validate_structure(s);
  return s;
}

json structure_to_json(const IncidenceStructure& s) {
  json free = json::array();
  for (int f : s.free_points) free.push_back({f});
  return {{"lines", s.lines}, {"points", s.points}, {"free", free}};
}

json realizability_to_json(const RealizabilityVerdict& v) {
  const char* status = v.status == RealizabilityVerdict::Status::REALIZABLE
                           ? "REALIZABLE"
                           : v.status == RealizabilityVerdict::Status::GENERIC_FAIL
                                 ? "GENERIC_FAIL"
                                 : "UNKNOWN";
  json out = {{"status", status}, {"seeds_tried", v.seeds_tried}};
  if (v.status == RealizabilityVerdict::Status::REALIZABLE) {
    json witness = json::array();
    for (const auto& line : v.witness) {
      json coeffs = json::array();
      for (const auto& q : line) coeffs.push_back(q.get_str());
      witness.push_back(coeffs);
    }
    out["witness"] = witness;
    out["seed"] = v.good_seed;
    out["witness_pencil"] = v.witness_pencil;
    json coincident = json::array();
    for (auto [a, b] : v.coincident_points) coincident.push_back({a, b});
    out["coincident_points"] = coincident;
  }
  if (!v.diagnostic.empty()) out["diagnostic"] = v.diagnostic;
  return out;
}

json certify_to_json(const CertifyResult& c) {
  const char* verdict = c.verdict == CertifyResult::Verdict::UNEXPECTED
                            ? "UNEXPECTED"
                            : c.verdict == CertifyResult::Verdict::NOT_UNEXPECTED
                                  ? "NOT_UNEXPECTED"
                                  : "INCONCLUSIVE";
  return {{"verdict", verdict},
          {"all_collapse", c.all_collapse},
          {"realizability", realizability_to_json(c.realizability)},
          {"note", c.note}};
}

}  // namespace plumbfill
