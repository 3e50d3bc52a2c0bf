#pragma once

// Scott deformation of a decorated germ into the nested factorization with
// pairwise disjoint vanishing cycles, the fiber construction read directly
// off a plumbing graph, and the agreement check between the two.

#include "germ.hpp"
#include "lefschetz.hpp"

#include <utility>
#include <vector>

namespace plumbfill {

struct LaminarFamily {
  std::vector<int> order;  // order[pos] = branch label at hole position pos+1

  struct Block {
    int level = 1;                // tangency level l >= 1
    std::vector<int> branches;    // block members, sorted, size >= 2
  };
  std::vector<Block> blocks;

  std::vector<std::pair<int, int>> free_counts;  // (branch, w_i - t_i)
};

struct ScottResult {
  LaminarFamily family;
  LefschetzFibration fibration;  // nested normal form: identity conjugators
  IncidenceMatrix matrix;
};

// Throws std::domain_error if the germ fails validation.
ScottResult scott_deformation(const DecoratedGerm& g);

struct GayMarkResult {
  LefschetzFibration fibration;
  std::vector<std::vector<int>> subsets;  // hole subsets of the cycles, in order
  IncidenceMatrix matrix;
  std::vector<int> hole_order;            // hole label at each position
};

// Fiber construction from the graph itself: outer_slot picks (1-based) which
// of the mult(X) (-1)-slots becomes the outer boundary; the remaining slots
// are the holes, labeled in slot order.
GayMarkResult gay_mark(const PlumbingGraph& g, int outer_slot);

// For every outer choice: Scott cycles of the derived germ and the
// graph-read cycles have equal monodromy records and equivalent incidence
// matrices, and the recognized graph is isomorphic to G.
bool artin_agreement(const PlumbingGraph& g);

}  // namespace plumbfill
