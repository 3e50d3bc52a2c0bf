#pragma once

// Decorated plane-curve germs: branch weights and pairwise tangency orders,
// derived from an extended resolution graph either by closed formulas or by
// an independent blow-down simulation.

#include "plumbing.hpp"

#include <array>
#include <vector>

namespace plumbfill {

struct DecoratedGerm {
  int m = 0;                               // branch count
  std::vector<int> weights;                // w_1..w_m
  std::vector<std::vector<int>> tangency;  // symmetric m x m, diagonal unused (0)

  bool operator==(const DecoratedGerm&) const = default;
};

// Closed formulas: w(C_i) = 1 + l(v0, v_i), tang(C_i, C_j) = rho(v_i, v_j; v0).
// Throws std::logic_error if the output violates the germ invariants.
DecoratedGerm derive_germ(const ExtendedGraph& ext);

// Independent oracle: simulate iterated blow-downs of (-1) exceptional curves
// (deepest first), tracking intersection numbers and per-curvetta weight
// counters.  Throws std::logic_error on a stuck or inconsistent state.
DecoratedGerm blowdown_oracle(const ExtendedGraph& ext);

struct GermReport {
  std::vector<int> weight_violations;               // branches with w_i <= t(C_i)
  std::vector<std::array<int, 3>> ultrametric_violations;  // (i,j,k) triples

  bool valid() const {
    return weight_violations.empty() && ultrametric_violations.empty();
  }
};

GermReport validate_germ(const DecoratedGerm& g);

}  // namespace plumbfill
