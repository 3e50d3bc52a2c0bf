#include "helpers.hpp"

#include <doctest.h>

using namespace plumbfill;

namespace {

IMat to_imat(const std::vector<std::vector<long>>& rows) {
  IMat out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long e : r) out.back().emplace_back(e);
  }
  return out;
}

IMat matmul(const IMat& a, const IMat& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  IMat c(n, std::vector<mpz_class>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

}  // namespace

TEST_CASE("Smith normal form basics") {
  auto input = to_imat({{2, 4}, {6, 8}});
  auto s = smith_normal_form(input);
  CHECK(s.d[0][0] == 2);
  CHECK(s.d[1][1] == 4);
  CHECK(matmul(matmul(s.u, input), s.v) == s.d);

  auto zero = to_imat({{0, 0}, {0, 0}});
  auto sz = smith_normal_form(zero);
  CHECK(sz.d[0][0] == 0);
  CHECK(matrix_rank(zero) == 0);
  CHECK(matrix_rank(to_imat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("invariants of the two-branch weight-2 pencil") {
  // Columns: the common point {1,2} and one free point per branch.
  auto mat = matrix_from_columns(2, {{1, 2}, {1}, {2}});
  auto inv = invariants(mat);
  CHECK(inv.h2_rank == 1);
  REQUIRE(inv.intersection_form.size() == 1);
  CHECK(inv.intersection_form[0][0] == -3);
  CHECK(inv.c1 == std::vector<mpz_class>{-1});
  CHECK(inv.euler == 2);
  CHECK(inv.b1_zero);
  CHECK(inv.h1_rank == 0);
  CHECK(inv.h1_torsion.empty());
  CHECK(inv.boundary_h1_torsion == std::vector<mpz_class>{3});
  CHECK(simply_connected_sufficient(mat));
}

TEST_CASE("matrix equivalence is column-order blind") {
  auto a = matrix_from_columns(3, {{1, 2}, {3}, {1}});
  auto b = matrix_from_columns(3, {{1}, {1, 2}, {3}});
  auto c = matrix_from_columns(3, {{1, 2}, {3}, {2}});
  CHECK(matrices_equivalent(a, b));
  CHECK_FALSE(matrices_equivalent(a, c));
}

TEST_CASE("lantern substitution rewrites one triple column") {
  auto mat = matrix_from_columns(3, {{1, 2, 3}, {1}, {2}, {3}});
  auto out = lantern_substitute(mat, 0);
  CHECK(out.n == mat.n - 1);
  CHECK(matrices_equivalent(out,
                            matrix_from_columns(3, {{1, 2}, {1, 3}, {2, 3}})));
  // chi drops by one, homology stays a rank-1 lattice here.
  CHECK(invariants(out).euler == invariants(mat).euler - 1);
  // Missing singleton support is rejected.
  auto thin = matrix_from_columns(3, {{1, 2, 3}, {1}, {2}});
  CHECK_THROWS_AS(lantern_substitute(thin, 0), std::domain_error);
  CHECK_THROWS_AS(lantern_substitute(mat, 1), std::domain_error);
}

TEST_CASE("recognition of nested families") {
  // Family of the -3 vertex (one outer choice): full set and singletons.
  auto g3 = artin_recognize(2, {{1, 2}, {1}, {2}});
  CHECK(trees_isomorphic(g3, make_graph({{0, -3}}, {})));

  // Family of the -2 -2 chain: the full singleton repeated three times.
  auto chain = artin_recognize(1, {{1}, {1}, {1}});
  CHECK(trees_isomorphic(chain, make_graph({{0, -2}, {1, -2}}, {{0, 1}})));

  // Missing singleton or full set is rejected.
  CHECK_THROWS_AS(artin_recognize(2, {{1, 2}, {1}}), std::domain_error);
  CHECK_THROWS_AS(artin_recognize(2, {{1}, {2}}), std::domain_error);
  // Non-laminar families are rejected.
  CHECK_THROWS_AS(
      artin_recognize(3, {{1, 2, 3}, {1, 2}, {2, 3}, {1}, {2}, {3}}),
      std::domain_error);
}

TEST_CASE("full row rank detection") {
  auto full = matrix_from_columns(2, {{1, 2}, {1}});
  IMat m;
  for (const auto& row : full.rows) {
    m.emplace_back();
    for (int e : row) m.back().emplace_back(e);
  }
  CHECK(matrix_rank(m) == 2);
}
