#pragma once

// JSON (de)serialization for every pipeline type.  Braid arrays are stored in
// files in functional order (rightmost letter acts first) and reversed into
// the in-memory application order here.

#include "arrangement.hpp"
#include "scott.hpp"

#include <json.hpp>

#include <string>

namespace plumbfill {

using nlohmann::json;

// Thrown on malformed JSON; carries a 1-based line/column diagnostic.
struct json_parse_error : std::runtime_error {
  int line = 0, column = 0;
  json_parse_error(const std::string& what, int l, int c)
      : std::runtime_error(what), line(l), column(c) {}
};

json parse_json_text(const std::string& text);

// Plumbing graphs: {"vertices":[{"id":0,"self_int":-11},...],"edges":[[0,1]],"root":0}
PlumbingGraph graph_from_json(const json& j);
json graph_to_json(const PlumbingGraph& g);
json validation_to_json(const ValidationReport& r);

// Germs: {"m":2,"weights":[2,2],"tangency":[[0,1],[1,0]]}
DecoratedGerm germ_from_json(const json& j);
json germ_to_json(const DecoratedGerm& g);

// Braid words: signed integer arrays, functional order in the file.
BraidWord braid_from_json(const json& j, int strands);
json braid_to_json(const BraidWord& w);

// Curves: {"m":4,"beta":[2],"core":[3,4]}
Curve curve_from_json(const json& j);
json curve_to_json(const Curve& c);

json record_to_json(const MappingClassRecord& r);

// Wiring: {"strands":4,"events":[{"braid":[]},{"point":[2,3]},...]}
WiringDiagram wiring_from_json(const json& j);
json wiring_to_json(const WiringDiagram& w);

// Incidence matrices as arrays of rows.
IncidenceMatrix matrix_from_json(const json& j);
json matrix_to_json(const IncidenceMatrix& i);

json invariants_to_json(const FillingInvariants& inv);
json laminar_to_json(const LaminarFamily& f);

// Structures: {"lines":10,"points":[[1,2],...],"free":[[3],[3]]}
IncidenceStructure structure_from_json(const json& j);
json structure_to_json(const IncidenceStructure& s);

json realizability_to_json(const RealizabilityVerdict& v);
json certify_to_json(const CertifyResult& c);

}  // namespace plumbfill
