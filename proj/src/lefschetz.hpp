#pragma once

// Lefschetz-fibration data over the holed disk: incidence matrices, integral
// homology of the filling via Smith normal form, intersection form and c1,
// the simply-connectedness criterion, lantern substitution and recognition
// of fibrations with disjoint nested vanishing cycles.

#include "mcg.hpp"
#include "plumbing.hpp"

#include <gmpxx.h>

#include <vector>

namespace plumbfill {

struct LefschetzFibration {
  int m = 1;                  // holes of the fiber
  std::vector<Curve> cycles;  // ordered vanishing cycles
};

struct IncidenceMatrix {
  int m = 0, n = 0;
  std::vector<std::vector<int>> rows;  // m rows of n entries in {0,1}

  std::vector<int> column(int j) const;           // hole set of column j (1-based holes)
  bool operator==(const IncidenceMatrix&) const = default;
};

IncidenceMatrix incidence_matrix(const LefschetzFibration& l);
IncidenceMatrix matrix_from_columns(int m, const std::vector<std::vector<int>>& cols);

// Combinatorial equivalence: equal column multisets.
bool matrices_equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b);

using IMat = std::vector<std::vector<mpz_class>>;

struct SmithResult {
  IMat d, u, v;  // u * input * v = d, d diagonal with d_k | d_{k+1}
};

SmithResult smith_normal_form(const IMat& input);

struct FillingInvariants {
  std::vector<mpz_class> h1_torsion;  // invariant factors > 1 of coker(I)
  int h1_rank = 0;
  int h2_rank = 0;
  IMat intersection_form;             // -B*B^T for the Hermite kernel basis B
  std::vector<mpz_class> c1;          // row sums of B
  int euler = 0;                      // 1 - m + n
  bool b1_zero = false;               // rank(I) == m
  std::vector<mpz_class> boundary_h1_torsion;  // torsion of coker(-B*B^T)
};

FillingInvariants invariants(const IncidenceMatrix& i);

// Sufficient condition for a simply-connected total space: every hole has a
// boundary-parallel column e_i.
bool simply_connected_sufficient(const IncidenceMatrix& i);

// Replace a weight-3 column on rows {i,j,k} plus one each of e_i, e_j, e_k by
// the three columns e_i+e_j, e_i+e_k, e_j+e_k.  Throws std::domain_error if
// the preconditions fail.  n (and so χ) drops by exactly 1.
IncidenceMatrix lantern_substitute(const IncidenceMatrix& i, int triple_col);

// Reconstruct a plumbing graph from a fibration given as a laminar family of
// hole subsets (with multiplicity): regions of the fiber between nested
// cycles become vertices with v.v = -(number of cycles on the region
// boundary).  Requires the full hole set, a singleton per hole, laminarity,
// and all v.v <= -2; throws std::domain_error otherwise.
PlumbingGraph artin_recognize(int m, const std::vector<std::vector<int>>& family);

int matrix_rank(const IMat& input);

}  // namespace plumbfill
