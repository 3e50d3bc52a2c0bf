#include "lefschetz.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace plumbfill {

std::vector<int> IncidenceMatrix::column(int j) const {
  std::vector<int> holes;
  for (int i = 0; i < m; ++i)
    if (rows[i][j]) holes.push_back(i + 1);
  return holes;
}

IncidenceMatrix incidence_matrix(const LefschetzFibration& l) {
  std::vector<std::vector<int>> cols;
  for (const Curve& c : l.cycles) cols.push_back(enclosed_holes(c));
  return matrix_from_columns(l.m, cols);
}

IncidenceMatrix matrix_from_columns(int m,
                                    const std::vector<std::vector<int>>& cols) {
  IncidenceMatrix i;
  i.m = m;
  i.n = static_cast<int>(cols.size());
  i.rows.assign(m, std::vector<int>(i.n, 0));
  for (int j = 0; j < i.n; ++j) {
    if (cols[j].empty()) throw std::domain_error("empty incidence column");
    for (int h : cols[j]) {
      if (h < 1 || h > m) throw std::domain_error("hole index out of range");
      i.rows[h - 1][j] = 1;
    }
  }
  return i;
}

bool matrices_equivalent(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  if (a.m != b.m || a.n != b.n) return false;
  std::multiset<std::vector<int>> ca, cb;
  for (int j = 0; j < a.n; ++j) ca.insert(a.column(j));
  for (int j = 0; j < b.n; ++j) cb.insert(b.column(j));
  return ca == cb;
}

namespace {

IMat identity_mat(int n) {
  IMat e(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < n; ++i) e[i][i] = 1;
  return e;
}

}  // namespace

SmithResult smith_normal_form(const IMat& input) {
  SmithResult r;
  r.d = input;
  int m = static_cast<int>(input.size());
  int n = m ? static_cast<int>(input[0].size()) : 0;
  r.u = identity_mat(m);
  r.v = identity_mat(n);
  IMat& d = r.d;

  auto swap_rows = [&](int a, int b) {
    std::swap(d[a], d[b]);
    std::swap(r.u[a], r.u[b]);
  };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
    for (int i = 0; i < n; ++i) std::swap(r.v[i][a], r.v[i][b]);
  };
  auto add_row = [&](int dst, int src, const mpz_class& f) {
    for (int j = 0; j < n; ++j) d[dst][j] += f * d[src][j];
    for (int j = 0; j < m; ++j) r.u[dst][j] += f * r.u[src][j];
  };
  auto add_col = [&](int dst, int src, const mpz_class& f) {
    for (int i = 0; i < m; ++i) d[i][dst] += f * d[i][src];
    for (int i = 0; i < n; ++i) r.v[i][dst] += f * r.v[i][src];
  };
  auto negate_row = [&](int i) {
    for (int j = 0; j < n; ++j) d[i][j] = -d[i][j];
    for (int j = 0; j < m; ++j) r.u[i][j] = -r.u[i][j];
  };

  for (int t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Locate the entry of minimal absolute value in the remaining block.
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (d[i][j] != 0 &&
              (pi < 0 || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        pi = pj = -1;
        break;  // block is zero: done entirely
      }
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (int i = t + 1; i < m; ++i)
        if (d[i][t] != 0) {
          mpz_class q = d[i][t] / d[t][t];  // truncated division
          add_row(i, t, -q);
          if (d[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < n; ++j)
        if (d[t][j] != 0) {
          mpz_class q = d[t][j] / d[t][t];
          add_col(j, t, -q);
          if (d[t][j] != 0) clean = false;
        }
      if (!clean) continue;  // a smaller nonzero appeared; re-pivot

      // Enforce divisibility of the rest of the block by the pivot.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (d[i][j] % d[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (!divides) continue;
      if (d[t][t] < 0) negate_row(t);
      break;
    }
    if (d[t][t] == 0) break;
  }
  return r;
}

int matrix_rank(const IMat& input) {
  SmithResult s = smith_normal_form(input);
  int m = static_cast<int>(input.size());
  int n = m ? static_cast<int>(input[0].size()) : 0;
  int rank = 0;
  for (int t = 0; t < std::min(m, n); ++t)
    if (s.d[t][t] != 0) ++rank;
  return rank;
}

namespace {

// Row-style Hermite reduction of a full-row-rank lattice basis, giving a
// deterministic kernel basis: pivots positive, entries above pivots reduced
// into [0, pivot).
void hermite_rows(IMat& b) {
  int rows = static_cast<int>(b.size());
  if (rows == 0) return;
  int cols = static_cast<int>(b[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    // gcd-eliminate below `row` in this column
    for (;;) {
      int best = -1;
      for (int i = row; i < rows; ++i)
        if (b[i][col] != 0 && (best < 0 || abs(b[i][col]) < abs(b[best][col])))
          best = i;
      if (best < 0) break;
      std::swap(b[row], b[best]);
      bool clean = true;
      for (int i = row + 1; i < rows; ++i)
        if (b[i][col] != 0) {
          mpz_class q = b[i][col] / b[row][col];
          for (int j = 0; j < cols; ++j) b[i][j] -= q * b[row][j];
          if (b[i][col] != 0) clean = false;
        }
      if (clean) break;
    }
    if (b[row][col] == 0) continue;
    if (b[row][col] < 0)
      for (int j = 0; j < cols; ++j) b[row][j] = -b[row][j];
    for (int i = 0; i < row; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), b[i][col].get_mpz_t(), b[row][col].get_mpz_t());
      if (q != 0)
        for (int j = 0; j < cols; ++j) b[i][j] -= q * b[row][j];
    }
    ++row;
  }
}

IMat to_imat(const IncidenceMatrix& i) {
  IMat a(i.m, std::vector<mpz_class>(i.n, 0));
  for (int r = 0; r < i.m; ++r)
    for (int c = 0; c < i.n; ++c) a[r][c] = i.rows[r][c];
  return a;
}

std::vector<mpz_class> diagonal_torsion(const IMat& a) {
  SmithResult s = smith_normal_form(a);
  std::vector<mpz_class> torsion;
  int k = std::min(a.size(), a.empty() ? size_t(0) : a[0].size());
  for (int t = 0; t < k; ++t)
    if (s.d[t][t] != 0 && abs(s.d[t][t]) > 1) torsion.push_back(abs(s.d[t][t]));
  return torsion;
}

}  // namespace

FillingInvariants invariants(const IncidenceMatrix& i) {
  FillingInvariants f;
  IMat a = to_imat(i);
  SmithResult s = smith_normal_form(a);
  int rank = 0;
  for (int t = 0; t < std::min(i.m, i.n); ++t)
    if (s.d[t][t] != 0) ++rank;

  for (int t = 0; t < rank; ++t)
    if (s.d[t][t] > 1) f.h1_torsion.push_back(s.d[t][t]);
  f.h1_rank = i.m - rank;
  f.b1_zero = rank == i.m;
  f.euler = 1 - i.m + i.n;

  // Kernel basis: columns of V matching zero columns of D.
  IMat basis;
  for (int k = 0; k < i.n; ++k) {
    bool zero = k >= std::min(i.m, i.n) || s.d[k][k] == 0;
    if (!zero) continue;
    std::vector<mpz_class> vec(i.n);
    for (int r = 0; r < i.n; ++r) vec[r] = s.v[r][k];
    basis.push_back(std::move(vec));
  }
  hermite_rows(basis);
  f.h2_rank = static_cast<int>(basis.size());

  f.intersection_form.assign(f.h2_rank, std::vector<mpz_class>(f.h2_rank, 0));
  for (int x = 0; x < f.h2_rank; ++x)
    for (int y = 0; y < f.h2_rank; ++y) {
      mpz_class dot = 0;
      for (int j = 0; j < i.n; ++j) dot += basis[x][j] * basis[y][j];
      f.intersection_form[x][y] = -dot;
    }
  f.c1.resize(f.h2_rank);
  for (int x = 0; x < f.h2_rank; ++x) {
    mpz_class sum = 0;
    for (int j = 0; j < i.n; ++j) sum += basis[x][j];
    f.c1[x] = sum;
  }
  f.boundary_h1_torsion = diagonal_torsion(f.intersection_form);
  return f;
}

bool simply_connected_sufficient(const IncidenceMatrix& i) {
  for (int r = 0; r < i.m; ++r) {
    bool found = false;
    for (int j = 0; j < i.n && !found; ++j) {
      auto col = i.column(j);
      found = col.size() == 1 && col[0] == r + 1;
    }
    if (!found) return false;
  }
  return true;
}

IncidenceMatrix lantern_substitute(const IncidenceMatrix& i, int triple_col) {
  if (triple_col < 0 || triple_col >= i.n)
    throw std::domain_error("lantern: column index out of range");
  auto triple = i.column(triple_col);
  if (triple.size() != 3)
    throw std::domain_error("lantern: chosen column does not have weight 3");

  std::vector<std::vector<int>> cols;
  std::set<int> needed(triple.begin(), triple.end());
  for (int j = 0; j < i.n; ++j) {
    if (j == triple_col) continue;
    auto col = i.column(j);
    if (col.size() == 1 && needed.count(col[0])) {
      needed.erase(col[0]);  // consume one free column per involved hole
      continue;
    }
    cols.push_back(col);
  }
  if (!needed.empty())
    throw std::domain_error("lantern: missing a boundary-parallel column");
  cols.push_back({triple[0], triple[1]});
  cols.push_back({triple[0], triple[2]});
  cols.push_back({triple[1], triple[2]});
  return matrix_from_columns(i.m, cols);
}

PlumbingGraph artin_recognize(int m, const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> sets;
  for (auto s : family) {
    if (s.empty()) throw std::domain_error("empty hole subset");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::domain_error("repeated hole in a subset");
    if (s.front() < 1 || s.back() > m)
      throw std::domain_error("hole index out of range");
    sets.push_back(std::move(s));
  }
  // Laminarity.
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (size_t x = 0; x < sets.size(); ++x)
    for (size_t y = x + 1; y < sets.size(); ++y) {
      std::vector<int> inter;
      std::set_intersection(sets[x].begin(), sets[x].end(), sets[y].begin(),
                            sets[y].end(), std::back_inserter(inter));
      if (!inter.empty() && !subset(sets[x], sets[y]) && !subset(sets[y], sets[x]))
        throw std::domain_error("family of cycles is not laminar");
    }
  // Required cycles: full set and one singleton per hole.
  std::vector<int> full(m);
  for (int h = 1; h <= m; ++h) full[h - 1] = h;
  if (std::find(sets.begin(), sets.end(), full) == sets.end())
    throw std::domain_error("no cycle encloses all holes");
  for (int h = 1; h <= m; ++h)
    if (std::find(sets.begin(), sets.end(), std::vector<int>{h}) == sets.end())
      throw std::domain_error("hole " + std::to_string(h) +
                              " has no boundary-parallel cycle");

  // Occurrence forest: insert by decreasing size; the parent of an occurrence
  // is the innermost already-inserted superset (equal sets chain linearly).
  std::stable_sort(sets.begin(), sets.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  int k = static_cast<int>(sets.size());
  std::vector<int> parent(k, -1), nchildren(k, 0);
  for (int x = 0; x < k; ++x) {
    int best = -1;
    for (int y = 0; y < x; ++y)
      if (subset(sets[x], sets[y])) best = y;  // later y is nested deeper
    parent[x] = best;
    if (best >= 0) nchildren[best]++;
  }
  // Exactly one root: the outermost full-set occurrence.
  for (int x = 1; x < k; ++x)
    if (parent[x] < 0) throw std::domain_error("cycle family is not nested");

  // Regions between consecutive cycles are vertices; the innermost copy of a
  // singleton bounds a hole rather than a region, so it is not a vertex.
  std::vector<bool> vertex(k, true);
  for (int x = 0; x < k; ++x)
    if (sets[x].size() == 1 && nchildren[x] == 0) vertex[x] = false;

  std::vector<std::pair<int, int>> verts;  // (occurrence, new id)
  std::vector<int> vid(k, -1);
  int next = 0;
  for (int x = 0; x < k; ++x)
    if (vertex[x]) {
      vid[x] = next++;
      verts.emplace_back(x, vid[x]);
    }
  std::vector<std::pair<int, int>> vertices, edges;
  for (auto [x, id] : verts) {
    int self = -(1 + nchildren[x]);
    vertices.emplace_back(id, self);
    if (parent[x] >= 0 && vid[parent[x]] >= 0)
      edges.emplace_back(vid[parent[x]], id);
  }
  for (auto [id, self] : vertices)
    if (self >= -1)
      throw std::domain_error("region with fewer than 2 boundary cycles");

  PlumbingGraph g = make_graph(vertices, edges, 0);
  if (!validate_reduced_cycle(g).all_ok())
    throw std::domain_error("recognized graph fails validation");
  return g;
}

}  // namespace plumbfill
