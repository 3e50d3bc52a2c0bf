#pragma once

// Shared randomized generators for the property tests: valid reduced-cycle
// trees, extensions, and wiring diagrams.

#include "arrangement.hpp"
#include "scott.hpp"

#include <random>

namespace plumbfill::testing {

// Random tree whose self-intersections satisfy v.v <= -(deg(v) + 1), which
// forces strict diagonal dominance (negative definiteness), the reduced-cycle
// inequality and the absence of (-1)-vertices in one stroke.
inline PlumbingGraph random_valid_tree(std::mt19937_64& rng, int max_vertices,
                                       int max_extra = 2) {
  int n = std::uniform_int_distribution<int>(1, max_vertices)(rng);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v) {
    int p = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(p, v);
    deg[p]++;
    deg[v]++;
  }
  std::vector<std::pair<int, int>> vertices;
  for (int v = 0; v < n; ++v) {
    int extra = std::uniform_int_distribution<int>(0, max_extra)(rng);
    int self = -(deg[v] + 1 + extra);
    if (self == -1) self = -2;  // lone root with extra = 0
    vertices.emplace_back(v, self);
  }
  return make_graph(std::move(vertices), std::move(edges));
}

inline ExtendedGraph random_extension(std::mt19937_64& rng,
                                      const PlumbingGraph& g) {
  auto exts = enumerate_extensions(g);
  return exts[std::uniform_int_distribution<size_t>(0, exts.size() - 1)(rng)];
}

inline WiringDiagram random_wiring(std::mt19937_64& rng, int max_strands,
                                   int max_points, int max_braid_len) {
  WiringDiagram w;
  w.strands = std::uniform_int_distribution<int>(2, max_strands)(rng);
  int points = std::uniform_int_distribution<int>(1, max_points)(rng);
  auto random_braid = [&]() {
    BraidWord b;
    b.strands = w.strands;
    int len = std::uniform_int_distribution<int>(0, max_braid_len)(rng);
    for (int i = 0; i < len; ++i) {
      int gen = std::uniform_int_distribution<int>(1, w.strands - 1)(rng);
      b.letters.push_back(std::bernoulli_distribution(0.5)(rng) ? gen : -gen);
    }
    return b;
  };
  for (int p = 0; p < points; ++p) {
    w.events.push_back(WiringEvent::braid_event(random_braid()));
    int lo = std::uniform_int_distribution<int>(1, w.strands)(rng);
    int hi = std::uniform_int_distribution<int>(lo, w.strands)(rng);
    w.events.push_back(WiringEvent::point_event(lo, hi));
  }
  return w;
}

}  // namespace plumbfill::testing
