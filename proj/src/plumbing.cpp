#include "plumbing.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>

namespace plumbfill {

int PlumbingGraph::index_of(int id) const {
  for (int i = 0; i < size(); ++i)
    if (ids[i] == id) return i;
  throw structure_error("unknown vertex id " + std::to_string(id));
}

PlumbingGraph make_graph(std::vector<std::pair<int, int>> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::optional<int> root) {
  PlumbingGraph g;
  for (auto& [id, s] : vertices) {
    g.ids.push_back(id);
    g.self_int.push_back(s);
  }
  std::set<int> seen(g.ids.begin(), g.ids.end());
  if (static_cast<int>(seen.size()) != g.size())
    throw structure_error("duplicate vertex ids");

  g.adj.assign(g.size(), {});
  std::set<std::pair<int, int>> edge_seen;
  for (auto [a, b] : edges) {
    if (a == b) throw structure_error("self-loop at vertex " + std::to_string(a));
    if (!seen.count(a) || !seen.count(b))
      throw structure_error("edge endpoint not a vertex");
    auto key = std::minmax(a, b);
    if (!edge_seen.insert(key).second)
      throw structure_error("multi-edge between " + std::to_string(a) + " and " +
                            std::to_string(b));
    g.edges.emplace_back(a, b);
    int ia = g.index_of(a), ib = g.index_of(b);
    g.adj[ia].push_back(ib);
    g.adj[ib].push_back(ia);
  }
  if (root && !seen.count(*root)) throw structure_error("root id not a vertex");
  g.root = root;
  return g;
}

namespace {

bool is_tree(const PlumbingGraph& g) {
  if (g.size() == 0) return false;
  if (static_cast<int>(g.edges.size()) != g.size() - 1) return false;
  std::vector<bool> seen(g.size(), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.size();
}

// Exact test via leading principal minors: M is negative definite iff
// (-1)^k det(M_k) > 0 for every k.
bool negative_definite(const PlumbingGraph& g) {
  int n = g.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = g.self_int[i];
  for (int i = 0; i < n; ++i)
    for (int j : g.adj[i]) m[i][j] = 1;

  // Fraction-free-enough Gaussian elimination over Q; the sign of the k-th
  // leading minor is the sign of the product of the first k pivots.
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) return false;  // zero leading minor: not definite
    sign *= sgn(m[k][k]);
    int want = (k % 2 == 0) ? -1 : 1;  // (-1)^{k+1} minors alternate
    if (sign != want) return false;
    for (int i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      mpq_class f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

}  // namespace

ValidationReport validate_reduced_cycle(const PlumbingGraph& g) {
  ValidationReport r;
  r.is_tree = is_tree(g);
  r.negative_definite = r.is_tree && negative_definite(g);
  bool ineq = true;
  for (int i = 0; i < g.size(); ++i)
    if (g.degree(i) > -g.self_int[i]) {
      ineq = false;
      r.violating_ids.push_back(g.ids[i]);
    }
  r.reduced_cycle = r.is_tree && r.negative_definite && ineq;
  return r;
}

FundamentalCycle fundamental_cycle(const PlumbingGraph& g) {
  if (!validate_reduced_cycle(g).all_ok())
    throw std::domain_error("graph fails the reduced-fundamental-cycle validation");
  FundamentalCycle f;
  f.coefficients.assign(g.size(), 1);
  for (int i = 0; i < g.size(); ++i)
    f.multiplicity -= g.self_int[i] + g.degree(i);
  return f;
}

std::vector<Slot> enumerate_slots(const PlumbingGraph& g) {
  std::vector<Slot> slots;
  for (int i = 0; i < g.size(); ++i) {
    int count = -(g.self_int[i] + g.degree(i));
    for (int c = 0; c < count; ++c) slots.push_back({g.ids[i], c});
  }
  return slots;
}

int ExtendedGraph::carrier(int label) const {
  if (label < 1 || label > branch_count())
    throw std::domain_error("unknown curvetta label " + std::to_string(label));
  return leaves[label - 1].first;
}

std::vector<ExtendedGraph> enumerate_extensions(const PlumbingGraph& g) {
  if (!validate_reduced_cycle(g).all_ok())
    throw std::domain_error("graph fails the reduced-fundamental-cycle validation");
  for (int s : g.self_int)
    if (s == -1) throw std::domain_error("graph has a (-1) vertex; blow down first");

  auto slots = enumerate_slots(g);
  int next_id = *std::max_element(g.ids.begin(), g.ids.end()) + 1;
  std::vector<ExtendedGraph> out;
  for (size_t deleted = 0; deleted < slots.size(); ++deleted) {
    ExtendedGraph ext;
    ext.base = g;
    ext.root_id = slots[deleted].vertex_id;
    int id = next_id;
    for (size_t k = 0; k < slots.size(); ++k) {
      if (k == deleted) continue;
      ext.leaves.emplace_back(slots[k].vertex_id, id++);
    }
    out.push_back(std::move(ext));
  }
  return out;
}

bool extension_invariant_holds(const ExtendedGraph& ext) {
  const PlumbingGraph& g = ext.base;
  std::vector<int> extra(g.size(), 0);  // leaves attached per base vertex
  for (auto& [at, leaf] : ext.leaves) {
    (void)leaf;
    extra[g.index_of(at)]++;
  }
  int root_like = 0;
  bool ok = true;
  for (int i = 0; i < g.size(); ++i) {
    int val = g.self_int[i] + g.degree(i) + extra[i];
    if (val == -1) {
      ++root_like;
      if (g.ids[i] != ext.root_id) ok = false;
    } else if (val != 0) {
      ok = false;
    }
  }
  // Leaves themselves: self_int -1, valency 1 by construction.
  return ok && root_like == 1;
}

std::vector<int> root_path(const ExtendedGraph& ext, int label) {
  const PlumbingGraph& g = ext.base;
  int from = g.index_of(ext.root_id);
  int to = g.index_of(ext.carrier(label));
  // DFS for the unique tree path.
  std::vector<int> parent(g.size(), -1);
  std::vector<int> stack = {from};
  std::vector<bool> seen(g.size(), false);
  seen[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;  // root first, carrier last
}

LengthOverlap length_overlap(const ExtendedGraph& ext, int i, int j) {
  auto pi = root_path(ext, i);
  auto pj = root_path(ext, j);
  LengthOverlap lo;
  lo.length = static_cast<int>(pi.size());
  size_t k = 0;
  while (k < pi.size() && k < pj.size() && pi[k] == pj[k]) ++k;
  lo.overlap = static_cast<int>(k);
  return lo;
}

namespace {

// AHU canonical form of a rooted labeled tree.
std::string canon(const PlumbingGraph& g, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : g.adj[v])
    if (w != parent) kids.push_back(canon(g, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(" + std::to_string(g.self_int[v]);
  for (auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> tree_centers(const PlumbingGraph& g) {
  int n = g.size();
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  for (int i = 0; i < n; ++i) deg[i] = g.degree(i);
  std::vector<int> layer;
  for (int i = 0; i < n; ++i)
    if (deg[i] == 1) layer.push_back(i);
  int removed = 0;
  std::vector<int> current = layer;
  while (removed + static_cast<int>(current.size()) < n) {
    removed += static_cast<int>(current.size());
    std::vector<int> next;
    for (int v : current)
      for (int w : g.adj[v])
        if (--deg[w] == 1) next.push_back(w);
    current = next;
  }
  return current;
}

}  // namespace

bool trees_isomorphic(const PlumbingGraph& a, const PlumbingGraph& b) {
  if (a.size() != b.size()) return false;
  auto forms = [](const PlumbingGraph& g) {
    std::vector<std::string> fs;
    for (int c : tree_centers(g)) fs.push_back(canon(g, c, -1));
    std::sort(fs.begin(), fs.end());
    return fs;
  };
  auto fa = forms(a), fb = forms(b);
  // Trees are isomorphic iff some center-rooted canonical forms agree.
  for (auto& x : fa)
    for (auto& y : fb)
      if (x == y) return true;
  return false;
}

}  // namespace plumbfill
