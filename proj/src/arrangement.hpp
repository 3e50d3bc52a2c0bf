#pragma once

// Incidence structures of pseudoline arrangements: pencil-collapse closure,
// exhaustive coarsening scans, exact-rational generic realizability,
// unexpectedness certification, builtin arrangements, and the bundling
// extension of star-shaped graphs.

#include "germ.hpp"
#include "lefschetz.hpp"
#include "plumbing.hpp"
#include "wiring.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace plumbfill {

struct IncidenceStructure {
  int lines = 0;                         // labels 1..lines
  std::vector<std::vector<int>> points;  // sorted line subsets, size >= 2
  std::vector<int> free_points;          // line label per free point
};

// Pairwise-once and index checks; throws std::domain_error on violation.
void validate_structure(const IncidenceStructure& s);

// Multi-points per line (free points not counted).
std::vector<int> multi_point_counts(const IncidenceStructure& s);

bool is_pencil(const IncidenceStructure& s);

struct CollapseResult {
  IncidenceStructure merged;
  bool pencil = false;
};

// Merge the given point pairs (indices into s.points), then close under the
// rule: all pairwise intersections of lines meeting a merged class join it.
CollapseResult collapse_closure(const IncidenceStructure& s,
                                const std::vector<std::pair<int, int>>& merges);

struct ScanResult {
  bool all_collapse = false;
  std::vector<std::tuple<int, int, bool>> merges;  // (i, j, collapses to pencil)
};

ScanResult coarsening_scan(const IncidenceStructure& s);

struct RealizabilityVerdict {
  enum class Status { REALIZABLE, GENERIC_FAIL, UNKNOWN };
  Status status = Status::UNKNOWN;
  std::vector<std::array<mpq_class, 3>> witness;  // projective line coefficients
  int seeds_tried = 0;
  unsigned long long good_seed = 0;
  bool witness_pencil = false;
  std::vector<std::pair<int, int>> coincident_points;  // extra coincidences
  std::string diagnostic;
};

// Exact rational construction over `trials` random integer seeds; REALIZABLE
// is a proof (witness checked exactly), GENERIC_FAIL is one-sided evidence.
RealizabilityVerdict generic_realizability(const IncidenceStructure& s,
                                           int trials,
                                           unsigned long long seed);

struct CertifyResult {
  enum class Verdict { UNEXPECTED, NOT_UNEXPECTED, INCONCLUSIVE };
  Verdict verdict = Verdict::INCONCLUSIVE;
  bool all_collapse = false;
  RealizabilityVerdict realizability;
  std::string note;  // evidence used, stated explicitly
};

// Throws std::domain_error on pencil input.
CertifyResult unexpected_certify(const IncidenceStructure& s, int trials,
                                 unsigned long long seed);

// Builtins: "pappus_P" (10 lines), "orevkov_Q" (11), "pseudo_pappus" (9),
// "grid_Qk" (2N+5 lines, parameters N >= 4 and 0 <= k <= N).
IncidenceStructure builtin_structure(const std::string& name, int n = 4,
                                     int k = 0);

// Incidence matrix of the structure with uniform/explicit line weights:
// multi-point columns plus singleton columns filling each row to weights[i].
IncidenceMatrix structure_matrix(const IncidenceStructure& s,
                                 const std::vector<int>& weights);

// Inverse of the no-braiding encoding: events of a braid-free wiring diagram
// become the points of an incidence structure (wires = lines).
IncidenceStructure structure_from_wiring(const WiringDiagram& w);

struct BundleResult {
  DecoratedGerm germ;                // germ of all bundle curves
  std::vector<int> curve_line;       // original line of each curve (1-based)
  std::vector<int> curve_carrier;    // carrier vertex id in H per curve
  PlumbingGraph graph;               // the extended graph H
  // Curve-arrangement summary (multiplicities allowed): marked points as
  // curve subsets, and free-point counts per curve.
  std::vector<std::vector<int>> points;
  std::vector<int> free_counts;
};

// Star-shaped graph for pencil weights w (center -(m+1), leg i of w_i - 2
// many (-2)-vertices) with the rooted trees attached at the leg ends; the
// bundle recursion computes the germ of the result.  trees[i] may be empty
// (std::nullopt); a present tree must have its root set, be negative
// definite and (-1)-free, and H must satisfy the valency-weight condition.
BundleResult bundle_extend(
    const std::vector<int>& weights,
    const std::vector<std::optional<PlumbingGraph>>& trees,
    const IncidenceStructure* structure = nullptr);

}  // namespace plumbfill
