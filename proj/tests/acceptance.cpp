// Acceptance suite: twelve end-to-end checks, one pass/fail line each.
// Exits nonzero if any check fails.

#include "helpers.hpp"
#include "json_io.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>

using namespace plumbfill;
using testing::random_extension;
using testing::random_valid_tree;
using testing::random_wiring;

namespace {

int failures = 0;
std::vector<IncidenceMatrix> produced_matrices;  // audited by check 12

void report(int number, const std::string& name, bool ok, double seconds) {
  std::printf("criterion %2d: %s  [%s, %.2fs]\n", number,
              ok ? "PASS" : "FAIL", name.c_str(), seconds);
  if (!ok) ++failures;
}

void run(int number, const std::string& name,
         const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(number, name, ok, secs);
}

// ---- 1: two-way monodromy identity --------------------------------------

bool monodromy_identity() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    auto w = random_wiring(rng, 6, 8, 6);
    auto cycles = vanishing_cycles(w);
    if (!records_equal(circumnavigation_monodromy(w),
                       product_record(w.strands, cycles)))
      return false;
  }
  return true;
}

// ---- 2: weight/tangency oracle ------------------------------------------

bool germ_oracle() {
  std::mt19937_64 rng(2025);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = random_valid_tree(rng, 12);
    auto e = random_extension(rng, g);
    if (!(derive_germ(e) == blowdown_oracle(e))) return false;
  }
  return true;
}

// ---- 3: Artin pipeline ---------------------------------------------------

bool artin_pipeline() {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_valid_tree(rng, 10, 1);
    if (!artin_agreement(g)) return false;
    // Scott cycles of the first extension are pairwise disjoint.
    auto e = enumerate_extensions(g)[0];
    auto scott = scott_deformation(derive_germ(e));
    const auto& cycles = scott.fibration.cycles;
    for (size_t a = 0; a < cycles.size(); ++a)
      for (size_t b = a + 1; b < cycles.size(); ++b)
        if (!curves_disjoint(cycles[a], cycles[b])) return false;
    produced_matrices.push_back(scott.matrix);
  }
  return true;
}

// ---- 4: d = 3 cone -------------------------------------------------------

bool cone_check() {
  DecoratedGerm germ{2, {2, 2}, {{0, 1}, {1, 0}}};
  auto scott = scott_deformation(germ);
  produced_matrices.push_back(scott.matrix);
  auto inv = invariants(scott.matrix);
  bool ok = inv.h2_rank == 1 && inv.intersection_form.size() == 1 &&
            inv.intersection_form[0][0] == -3 && inv.euler == 2 &&
            inv.b1_zero && inv.h1_rank == 0 && inv.h1_torsion.empty() &&
            inv.boundary_h1_torsion == std::vector<mpz_class>{3} &&
            inv.c1 == std::vector<mpz_class>{-1};
  // Same invariants through the resolution plumbing itself.
  auto g = make_graph({{0, -3}}, {});
  for (int outer = 1; outer <= 3; ++outer) {
    auto gm = gay_mark(g, outer);
    produced_matrices.push_back(gm.matrix);
    ok = ok && matrices_equivalent(gm.matrix, scott.matrix);
  }
  return ok;
}

// ---- 5: example-diagram fidelity ----------------------------------------

bool wiring_fidelity() {
  WiringDiagram w;
  w.strands = 4;
  w.events = {
      WiringEvent::braid_event(BraidWord{4, {}}),
      WiringEvent::point_event(2, 3),
      WiringEvent::braid_event(BraidWord{4, {}}),
      WiringEvent::point_event(3, 4),
      WiringEvent::braid_event(BraidWord{4, {-2, -1}}),
      WiringEvent::point_event(3, 4),
  };
  auto cycles = vanishing_cycles(w);
  if (cycles.size() != 3) return false;
  // Not pushed into the rank audit: this diagram is a fragment (one strand
  // carries no marked point), not the full matrix of an arrangement filling.
  return curve_equal(cycles[0], convex_curve(4, 2, 3)) &&
         enclosed_holes(cycles[1]) == std::vector<int>{2, 4} &&
         curve_equal(cycles[2], Curve{4, BraidWord{4, {1, 2, 3, 2}}, 3, 4});
}

// ---- 6/7: the two certificates ------------------------------------------

bool pappus_certificate() {
  auto s = builtin_structure("pappus_P");
  if (multi_point_counts(s) !=
      std::vector<int>{6, 5, 6, 5, 6, 6, 6, 6, 6, 6})
    return false;
  auto res = unexpected_certify(s, 32, 7);
  return res.verdict == CertifyResult::Verdict::UNEXPECTED &&
         res.all_collapse &&
         res.realizability.status == RealizabilityVerdict::Status::GENERIC_FAIL &&
         res.realizability.seeds_tried == 32;
}

bool orevkov_certificate() {
  auto s = builtin_structure("orevkov_Q");
  auto counts = multi_point_counts(s);
  if (counts != std::vector<int>{4, 5, 5, 4, 5, 5, 5, 5, 5, 6, 6})
    return false;
  auto scan = coarsening_scan(s);
  auto real = generic_realizability(s, 32, 7);
  return scan.all_collapse &&
         real.status == RealizabilityVerdict::Status::GENERIC_FAIL;
}

// ---- 8: negative control -------------------------------------------------

bool pseudo_pappus_control() {
  auto res = unexpected_certify(builtin_structure("pseudo_pappus"), 32, 7);
  return res.verdict == CertifyResult::Verdict::NOT_UNEXPECTED &&
         res.realizability.status == RealizabilityVerdict::Status::REALIZABLE &&
         !res.realizability.witness_pencil &&
         !res.realizability.coincident_points.empty();
}

// ---- 9/10: Euler chain via lantern substitutions -------------------------

bool lantern_records_equal() {
  int m = 3;
  std::vector<Curve> left = {convex_curve(m, 1, 3), convex_curve(m, 1, 1),
                             convex_curve(m, 2, 2), convex_curve(m, 3, 3)};
  // In application order the relation reads t_12 t_23 t_13 (any cyclic
  // rotation works; the reversed cycle does not).
  Curve t13{m, BraidWord{m, {2}}, 1, 2};
  std::vector<Curve> right = {convex_curve(m, 1, 2), convex_curve(m, 2, 3),
                              t13};
  return records_equal(product_record(m, left), product_record(m, right));
}

bool euler_chain() {
  const int N = 4;
  std::vector<int> weights(2 * N + 5, 2 * N + 5);
  std::vector<IncidenceMatrix> mats;
  for (int k = 0; k <= N; ++k) {
    auto s = builtin_structure("grid_Qk", N, k);
    mats.push_back(structure_matrix(s, weights));
    produced_matrices.push_back(mats.back());
  }
  auto chi = [](const IncidenceMatrix& m) { return invariants(m).euler; };
  int chi0 = chi(mats[0]);
  for (int k = 0; k <= N; ++k)
    if (chi(mats[k]) != chi0 - k) return false;

  // The lantern cells of the pencil line, in splitting order.
  std::vector<std::vector<int>> cells = {
      {2, 7, 13}, {3, 6, 13}, {4, 8, 13}, {5, 9, 13}};
  IncidenceMatrix current = mats[0];
  for (int k = 0; k < N; ++k) {
    int col = -1;
    for (int j = 0; j < current.n; ++j)
      if (current.column(j) == cells[k]) col = j;
    if (col < 0) return false;
    current = lantern_substitute(current, col);
    if (!matrices_equivalent(current, mats[k + 1])) return false;
    // Each substitution is the three-hole lantern identity on its cell.
    if (!lantern_records_equal()) return false;
  }
  return true;
}

// ---- 11: bundling formulas ----------------------------------------------

bool bundle_oracle() {
  std::mt19937_64 rng(2027);
  for (int trial = 0; trial < 50; ++trial) {
    int lines = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> weights(lines);
    for (int& w : weights) w = std::uniform_int_distribution<int>(3, 5)(rng);
    std::vector<std::optional<PlumbingGraph>> trees(lines);
    for (int i = 0; i < lines; ++i) {
      if (std::bernoulli_distribution(0.7)(rng)) {
        auto t = random_valid_tree(rng, 6, 1);
        int root = std::uniform_int_distribution<int>(0, t.size() - 1)(rng);
        trees[i] = make_graph(
            [&] {
              std::vector<std::pair<int, int>> vs;
              for (int v = 0; v < t.size(); ++v)
                vs.emplace_back(t.ids[v], t.self_int[v]);
              return vs;
            }(),
            t.edges, t.ids[root]);
      }
    }
    auto res = bundle_extend(weights, trees);

    // Independent oracle: derive the germ from the extended graph itself.
    // The center carries the single outer slot, so the first extension is
    // the relevant one.
    auto ext = enumerate_extensions(res.graph)[0];
    if (ext.root_id != 0) return false;
    auto oracle = derive_germ(ext);
    if (oracle.m != res.germ.m) return false;

    // Curves with the same carrier vertex are interchangeable; match the two
    // labelings through the carriers.
    std::map<int, std::vector<int>> oracle_at, bundle_at;
    for (int label = 1; label <= oracle.m; ++label)
      oracle_at[ext.carrier(label)].push_back(label);
    for (int c = 0; c < res.germ.m; ++c)
      bundle_at[res.curve_carrier[c]].push_back(c);
    if (oracle_at.size() != bundle_at.size()) return false;
    std::vector<int> to_oracle(res.germ.m, 0);  // bundle index -> oracle label
    for (auto& [carrier, labels] : oracle_at) {
      auto it = bundle_at.find(carrier);
      if (it == bundle_at.end() || it->second.size() != labels.size())
        return false;
      for (size_t i = 0; i < labels.size(); ++i)
        to_oracle[it->second[i]] = labels[i];
    }
    for (int a = 0; a < res.germ.m; ++a) {
      if (res.germ.weights[a] != oracle.weights[to_oracle[a] - 1]) return false;
      for (int b = 0; b < res.germ.m; ++b)
        if (a != b && res.germ.tangency[a][b] !=
                          oracle.tangency[to_oracle[a] - 1][to_oracle[b] - 1])
          return false;
    }
  }
  return true;
}

// ---- 12: b1 = 0 audit ----------------------------------------------------

bool b1_audit() {
  if (produced_matrices.empty()) return false;
  for (const auto& mat : produced_matrices)
    if (!invariants(mat).b1_zero) return false;
  return true;
}

}  // namespace

int main() {
  run(1, "two-way monodromy identity on 500 random diagrams",
      monodromy_identity);
  run(2, "germ formulas vs blow-down oracle on 200 random graphs", germ_oracle);
  run(3, "nested factorization pipeline on 100 random trees", artin_pipeline);
  run(4, "d = 3 cone invariants", cone_check);
  run(5, "example-diagram vanishing cycles", wiring_fidelity);
  run(6, "unexpectedness certificate: 10-line arrangement",
      pappus_certificate);
  run(7, "collapse + generic failure: 11-line arrangement",
      orevkov_certificate);
  run(8, "negative control: bent-line arrangement is not unexpected",
      pseudo_pappus_control);
  run(9, "Euler chain under lantern substitutions", euler_chain);
  run(10, "three-hole lantern identity", lantern_records_equal);
  run(11, "bundling germ vs extended-graph oracle on 50 random inputs",
      bundle_oracle);
  run(12, "every produced incidence matrix has full row rank", b1_audit);

  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
