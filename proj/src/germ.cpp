#include "germ.hpp"

#include <algorithm>
#include <array>

namespace plumbfill {

DecoratedGerm derive_germ(const ExtendedGraph& ext) {
  DecoratedGerm g;
  g.m = ext.branch_count();
  g.weights.resize(g.m);
  g.tangency.assign(g.m, std::vector<int>(g.m, 0));
  for (int i = 1; i <= g.m; ++i) {
    auto lo = length_overlap(ext, i, i);
    g.weights[i - 1] = 1 + lo.length;
    for (int j = i + 1; j <= g.m; ++j) {
      int t = length_overlap(ext, i, j).overlap;
      g.tangency[i - 1][j - 1] = g.tangency[j - 1][i - 1] = t;
    }
  }
  auto report = validate_germ(g);
  if (!report.valid())
    throw std::logic_error("derived germ violates its invariants");
  return g;
}

DecoratedGerm blowdown_oracle(const ExtendedGraph& ext) {
  const PlumbingGraph& base = ext.base;
  int nb = base.size();
  int m = ext.branch_count();
  int nl = static_cast<int>(ext.leaves.size());

  // Symmetric intersection table; self[i] only meaningful for exceptionals.
  std::vector<std::vector<int>> inter(nb + nl + m, std::vector<int>(nb + nl + m, 0));
  std::vector<long long> self(nb + nl + m, 0);
  for (int i = 0; i < nb; ++i) self[i] = base.self_int[i];
  for (auto [a, b] : base.edges) {
    int ia = base.index_of(a), ib = base.index_of(b);
    inter[ia][ib] = inter[ib][ia] = 1;
  }
  // Layout: [0, nb) base exceptionals, [nb, nb+nl) leaf exceptionals,
  // [nb+nl, nb+nl+m) curvettas; leaf k carries curvetta k.
  for (int k = 0; k < nl; ++k) {
    int leaf = nb + k;
    int at = base.index_of(ext.leaves[k].first);
    self[leaf] = -1;
    inter[leaf][at] = inter[at][leaf] = 1;
    int curve = nb + nl + k;
    inter[leaf][curve] = inter[curve][leaf] = 1;
  }
  int total = nb + nl + m;
  std::vector<bool> alive(total, true);
  auto is_exceptional = [&](int i) { return i < nb + nl; };

  // Depth from the extension root in the extended tree, fixed up front; used
  // only to pick a deterministic blow-down order (deepest (-1) first).
  std::vector<int> depth(total, 0);
  {
    std::vector<int> dist(nb, -1);
    std::vector<int> stack = {base.index_of(ext.root_id)};
    dist[stack[0]] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : base.adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          stack.push_back(w);
        }
    }
    for (int i = 0; i < nb; ++i) depth[i] = dist[i];
    for (int k = 0; k < nl; ++k)
      depth[nb + k] = dist[base.index_of(ext.leaves[k].first)] + 1;
  }

  std::vector<int> weights(m, 0);
  int blowdowns = 0;
  int exceptional_left = nb + nl;
  while (exceptional_left > 0) {
    int pick = -1;
    for (int i = 0; i < nb + nl; ++i)
      if (alive[i] && self[i] == -1 && (pick < 0 || depth[i] > depth[pick]))
        pick = i;
    if (pick < 0)
      throw std::logic_error("blow-down stuck: no (-1) exceptional curve left");

    // Smoothness guard: every curvetta meets every exceptional curve with
    // multiplicity at most one throughout the process.
    for (int c = 0; c < m; ++c)
      if (alive[nb + nl + c] && inter[nb + nl + c][pick] > 1)
        throw std::logic_error("curvetta meets an exceptional curve twice");

    for (int a = 0; a < total; ++a) {
      if (!alive[a] || a == pick) continue;
      if (is_exceptional(a)) self[a] += 1LL * inter[a][pick] * inter[a][pick];
      for (int b = a + 1; b < total; ++b) {
        if (!alive[b] || b == pick) continue;
        inter[a][b] += inter[a][pick] * inter[b][pick];
        inter[b][a] = inter[a][b];
      }
    }
    for (int c = 0; c < m; ++c)
      if (inter[nb + nl + c][pick] >= 1) weights[c]++;
    alive[pick] = false;
    --exceptional_left;
    ++blowdowns;
  }
  if (blowdowns != nb + nl)
    throw std::logic_error("unexpected number of blow-downs");

  DecoratedGerm g;
  g.m = m;
  g.weights = weights;
  g.tangency.assign(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) g.tangency[i][j] = inter[nb + nl + i][nb + nl + j];
  return g;
}

GermReport validate_germ(const DecoratedGerm& g) {
  GermReport r;
  for (int i = 0; i < g.m; ++i) {
    int t = 0;
    for (int j = 0; j < g.m; ++j)
      if (j != i) t = std::max(t, g.tangency[i][j]);
    if (g.weights[i] <= t) r.weight_violations.push_back(i + 1);
  }
  for (int i = 0; i < g.m; ++i)
    for (int j = 0; j < g.m; ++j)
      for (int k = 0; k < g.m; ++k) {
        if (i == j || j == k || i == k) continue;
        if (g.tangency[i][k] <
            std::min(g.tangency[i][j], g.tangency[j][k]))
          r.ultrametric_violations.push_back({i + 1, j + 1, k + 1});
      }
  return r;
}

}  // namespace plumbfill
