#include "json_io.hpp"

#include <doctest.h>

using namespace plumbfill;

TEST_CASE("parse errors carry line and column") {
  try {
    parse_json_text("{\n  \"a\": [1,\n}");
    FAIL("expected a parse error");
  } catch (const json_parse_error& e) {
    CHECK(e.line == 3);
    CHECK(e.column >= 1);
  }
}

TEST_CASE("graph round trip") {
  auto j = parse_json_text(
      R"({"vertices":[{"id":0,"self_int":-11},{"id":1,"self_int":-2}],"edges":[[0,1]],"root":0})");
  auto g = graph_from_json(j);
  CHECK(g.size() == 2);
  CHECK(g.root == 0);
  auto back = graph_from_json(graph_to_json(g));
  CHECK(back.ids == g.ids);
  CHECK(back.self_int == g.self_int);
  CHECK(back.edges == g.edges);
}

TEST_CASE("braid arrays are reversed between file and memory") {
  // [2,-1] in the file means "sigma_1^{-1} acts first".
  auto w = braid_from_json(parse_json_text("[2,-1]"), 3);
  CHECK(w.letters == std::vector<int>{-1, 2});
  CHECK(braid_to_json(w) == parse_json_text("[2,-1]"));
  CHECK_THROWS_AS(braid_from_json(parse_json_text("[3]"), 3),
                  std::domain_error);
}

TEST_CASE("curve and wiring round trips") {
  auto c = curve_from_json(parse_json_text(R"({"m":4,"beta":[2],"core":[3,4]})"));
  CHECK(c.m == 4);
  CHECK(c.lo == 3);
  CHECK(c.hi == 4);
  CHECK(curve_from_json(curve_to_json(c)) == c);

  auto w = wiring_from_json(parse_json_text(
      R"({"strands":4,"events":[{"braid":[]},{"point":[2,3]},{"braid":[-1,-2]},{"point":[3,4]}]})"));
  CHECK(w.strands == 4);
  CHECK(w.events.size() == 4);
  CHECK(w.events[2].braid.letters == std::vector<int>{-2, -1});
  auto back = wiring_from_json(wiring_to_json(w));
  CHECK(back.strands == w.strands);
  CHECK(back.events.size() == w.events.size());
}

TEST_CASE("structure serialization keeps free points as singletons") {
  auto s = structure_from_json(parse_json_text(
      R"({"lines":3,"points":[[1,2],[1,3],[2,3]],"free":[[2]]})"));
  CHECK(s.free_points == std::vector<int>{2});
  auto j = structure_to_json(s);
  CHECK(j.at("free") == parse_json_text("[[2]]"));
  CHECK_THROWS_AS(structure_from_json(parse_json_text(
                      R"({"lines":3,"points":[[1,2]]})")),
                  std::domain_error);
}

TEST_CASE("invariants report matches the documented shape") {
  auto mat = matrix_from_columns(2, {{1, 2}, {1}, {2}});
  auto j = invariants_to_json(invariants(mat));
  CHECK(j.at("h2_rank") == 1);
  CHECK(j.at("euler") == 2);
  CHECK(j.at("b1_zero") == true);
  CHECK(j.at("h1").at("rank") == 0);
  CHECK(j.at("form")[0][0] == "-3");
  CHECK(j.at("boundary_h1_torsion")[0] == "3");
}

TEST_CASE("matrix json rejects non-binary entries") {
  CHECK_THROWS_AS(matrix_from_json(parse_json_text("[[0,2]]")),
                  std::domain_error);
  auto m = matrix_from_json(parse_json_text("[[1,0],[0,1]]"));
  CHECK(m.m == 2);
  CHECK(m.n == 2);
}
