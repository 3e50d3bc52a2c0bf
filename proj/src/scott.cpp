#include "scott.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace plumbfill {

namespace {

// Recursive laminar ordering: split the branch set by "tangency >= level",
// order the classes by their smallest branch label, recurse.  The tangency
// relation at each level is an equivalence thanks to the ultrametric
// property, and branches of a class stay consecutive in the output.
void order_branches(const DecoratedGerm& g, const std::vector<int>& branches,
                    int level, std::vector<int>& out) {
  if (branches.size() == 1) {
    out.push_back(branches[0]);
    return;
  }
  std::vector<int> rest = branches;
  std::vector<std::vector<int>> classes;
  while (!rest.empty()) {
    int seed = *std::min_element(rest.begin(), rest.end());
    std::vector<int> cls, next;
    for (int b : rest) {
      if (b == seed || g.tangency[seed - 1][b - 1] >= level)
        cls.push_back(b);
      else
        next.push_back(b);
    }
    classes.push_back(cls);  // seeds are picked in increasing order already
    rest = next;
  }
  for (const auto& cls : classes) order_branches(g, cls, level + 1, out);
}

}  // namespace

ScottResult scott_deformation(const DecoratedGerm& g) {
  if (!validate_germ(g).valid())
    throw std::domain_error("germ fails validation");

  ScottResult res;
  int m = g.m;
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 1);
  order_branches(g, all, 1, res.family.order);

  std::vector<int> pos(m + 1, 0);  // 1-based branch -> 1-based position
  for (int p = 0; p < m; ++p) pos[res.family.order[p]] = p + 1;

  std::vector<int> t(m + 1, 0);
  int maxt = 0;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j)
      if (j != i) t[i] = std::max(t[i], g.tangency[i - 1][j - 1]);
    maxt = std::max(maxt, t[i]);
  }

  res.fibration.m = m;
  for (int level = 1; level <= maxt; ++level) {
    // Partition by tangency >= level; keep blocks of size >= 2.
    std::vector<bool> used(m + 1, false);
    for (int p = 0; p < m; ++p) {
      int i = res.family.order[p];
      if (used[i]) continue;
      std::vector<int> block = {i};
      used[i] = true;
      for (int q = p + 1; q < m; ++q) {
        int j = res.family.order[q];
        if (!used[j] && g.tangency[i - 1][j - 1] >= level) {
          block.push_back(j);
          used[j] = true;
        }
      }
      if (block.size() < 2) continue;
      std::sort(block.begin(), block.end());
      res.family.blocks.push_back({level, block});
      int lo = m + 1, hi = 0;
      for (int b : block) {
        lo = std::min(lo, pos[b]);
        hi = std::max(hi, pos[b]);
      }
      if (hi - lo + 1 != static_cast<int>(block.size()))
        throw std::logic_error("laminar block is not consecutive");
      res.fibration.cycles.push_back(convex_curve(m, lo, hi));
    }
  }
  for (int i = 1; i <= m; ++i) {
    int count = g.weights[i - 1] - t[i];
    res.family.free_counts.emplace_back(i, count);
    for (int c = 0; c < count; ++c)
      res.fibration.cycles.push_back(convex_curve(m, pos[i], pos[i]));
  }
  res.matrix = incidence_matrix(res.fibration);
  return res;
}

GayMarkResult gay_mark(const PlumbingGraph& g, int outer_slot) {
  auto slots = enumerate_slots(g);
  if (outer_slot < 1 || outer_slot > static_cast<int>(slots.size()))
    throw std::domain_error("invalid outer slot choice");
  auto ext = enumerate_extensions(g)[outer_slot - 1];
  int m = ext.branch_count();
  int root = g.index_of(ext.root_id);

  // Holes carried by each base vertex, in slot order = hole label order.
  std::vector<std::vector<int>> holes_at(g.size());
  for (int h = 1; h <= m; ++h)
    holes_at[g.index_of(ext.carrier(h))].push_back(h);

  // Rooted structure.
  std::vector<int> parent(g.size(), -1);
  std::vector<std::vector<int>> children(g.size());
  {
    std::vector<int> stack = {root};
    std::vector<bool> seen(g.size(), false);
    seen[root] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          parent[w] = v;
          children[v].push_back(w);
          stack.push_back(w);
        }
    }
  }

  // Smallest hole label in each subtree (drives the recursive ordering).
  std::vector<int> min_label(g.size(), m + 1);
  // Process vertices bottom-up (order by decreasing depth via simple DFS).
  {
    std::vector<int> dfs = {root}, seq;
    while (!dfs.empty()) {
      int v = dfs.back();
      dfs.pop_back();
      seq.push_back(v);
      for (int w : children[v]) dfs.push_back(w);
    }
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      int v = *it;
      for (int h : holes_at[v]) min_label[v] = std::min(min_label[v], h);
      for (int w : children[v]) min_label[v] = std::min(min_label[v], min_label[w]);
    }
  }

  GayMarkResult res;
  // Recursive ordering: at each vertex, interleave child subtrees and own
  // holes by their smallest contained label (matching the Scott order).
  std::vector<std::pair<int, int>> subtree_span(g.size(), {0, 0});  // positions
  {
    struct Item {
      int key;
      bool is_hole;
      int value;  // hole label or child vertex
    };
    // Explicit recursion via lambda.
    auto emit = [&](auto&& self, int v) -> void {
      int start = static_cast<int>(res.hole_order.size()) + 1;
      std::vector<Item> items;
      for (int h : holes_at[v]) items.push_back({h, true, h});
      for (int w : children[v]) items.push_back({min_label[w], false, w});
      std::sort(items.begin(), items.end(),
                [](const Item& a, const Item& b) { return a.key < b.key; });
      for (const Item& it : items) {
        if (it.is_hole)
          res.hole_order.push_back(it.value);
        else
          self(self, it.value);
      }
      subtree_span[v] = {start, static_cast<int>(res.hole_order.size())};
    };
    emit(emit, root);
  }
  std::vector<int> pos(m + 1, 0);
  for (int p = 0; p < m; ++p) pos[res.hole_order[p]] = p + 1;

  res.fibration.m = m;
  auto add_cycle = [&](int lo, int hi) {
    res.fibration.cycles.push_back(convex_curve(m, lo, hi));
    std::vector<int> subset;
    for (int p = lo; p <= hi; ++p) subset.push_back(res.hole_order[p - 1]);
    std::sort(subset.begin(), subset.end());
    res.subsets.push_back(std::move(subset));
  };

  add_cycle(1, m);  // outer-boundary-parallel cycle for the root region
  // One neck cycle per edge: the holes of the subtree beyond the edge.
  {
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : children[v]) {
        auto [lo, hi] = subtree_span[w];
        if (lo > hi) throw std::logic_error("neck cycle with no holes");
        add_cycle(lo, hi);
        stack.push_back(w);
      }
    }
  }
  for (int h = 1; h <= m; ++h) add_cycle(pos[h], pos[h]);

  res.matrix = incidence_matrix(res.fibration);
  return res;
}

bool artin_agreement(const PlumbingGraph& g) {
  auto report = validate_reduced_cycle(g);
  if (!report.all_ok()) return false;
  auto exts = enumerate_extensions(g);
  for (size_t outer = 1; outer <= exts.size(); ++outer) {
    const auto& ext = exts[outer - 1];
    auto germ = derive_germ(ext);
    auto scott = scott_deformation(germ);
    auto gm = gay_mark(g, static_cast<int>(outer));
    int m = germ.m;
    if (!records_equal(product_record(m, scott.fibration.cycles),
                       product_record(m, gm.fibration.cycles)))
      return false;
    if (!matrices_equivalent(scott.matrix, gm.matrix)) return false;
    if (!trees_isomorphic(artin_recognize(m, gm.subsets), g)) return false;
  }
  return true;
}

}  // namespace plumbfill
