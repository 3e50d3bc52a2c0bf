#include "braid.hpp"

#include <algorithm>
#include <numeric>

namespace plumbfill {

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw std::domain_error("braid strand counts differ");
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

Perm permutation(const BraidWord& w) {
  int m = w.strands;
  std::vector<int> at(m);  // at[p] = strand currently at position p
  std::iota(at.begin(), at.end(), 0);
  for (int letter : w.letters) {
    int p = std::abs(letter) - 1;
    if (p < 0 || p + 1 >= m) throw std::domain_error("letter out of range");
    std::swap(at[p], at[p + 1]);
  }
  Perm perm(m);
  for (int p = 0; p < m; ++p) perm[at[p]] = p;
  return perm;
}

bool is_pure(const BraidWord& w) {
  Perm p = permutation(w);
  for (int i = 0; i < w.strands; ++i)
    if (p[i] != i) return false;
  return true;
}

BraidWord half_twist(int strands, int lo, int hi) {
  if (lo < 1 || hi > strands || lo > hi)
    throw std::domain_error("half_twist: invalid block");
  // Descending product of ascending runs, written in functional order, then
  // reversed into application order.
  std::vector<int> functional;
  for (int top = hi - 1; top >= lo; --top)
    for (int i = lo; i <= top; ++i) functional.push_back(i);
  BraidWord w;
  w.strands = strands;
  w.letters.assign(functional.rbegin(), functional.rend());
  return w;
}

namespace {

Perm identity_perm(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta_perm(int m) {
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = m - 1 - i;
  return p;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm invert(const Perm& p) {
  Perm q(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) q[p[i]] = i;
  return q;
}

// tau(F) = Δ F Δ^{-1}; on permutations: D ∘ F ∘ D.
Perm tau(const Perm& f, const Perm& d) {
  Perm r(f.size());
  for (int x = 0; x < static_cast<int>(f.size()); ++x) r[x] = d[f[d[x]]];
  return r;
}

// Starting set of a permutation braid: positions p (0-based) with
// perm(p) > perm(p+1), i.e. σ_{p+1} left-divides it.
// Finishing set: same for the inverse permutation.
//
// Make the ordered pair (A then B) left-weighted by sliding initial letters
// of B into A while some p lies in S(B) \ F(A).  Returns true if modified.
bool make_left_weighted(Perm& a, Perm& b) {
  int m = static_cast<int>(a.size());
  bool changed = false;
  Perm ainv = invert(a);
  while (true) {
    int found = -1;
    for (int p = 0; p + 1 < m; ++p) {
      bool in_s = b[p] > b[p + 1];
      bool in_f = ainv[p] > ainv[p + 1];
      if (in_s && !in_f) {
        found = p;
        break;
      }
    }
    if (found < 0) break;
    int p = found;
    // A ← A·σ_{p+1}: post-compose with the transposition of values p, p+1.
    for (int x = 0; x < m; ++x) {
      if (a[x] == p)
        a[x] = p + 1;
      else if (a[x] == p + 1)
        a[x] = p;
    }
    std::swap(ainv[p], ainv[p + 1]);
    // B ← σ_{p+1}^{-1}·B: pre-compose, i.e. swap positions p, p+1.
    std::swap(b[p], b[p + 1]);
    changed = true;
  }
  return changed;
}

}  // namespace

NormalForm normalize(const BraidWord& w) {
  int m = w.strands;
  NormalForm nf;
  nf.strands = m;
  Perm d = delta_perm(m);

  std::vector<Perm>& fs = nf.factors;
  for (int letter : w.letters) {
    int p = std::abs(letter) - 1;
    if (p < 0 || p + 1 >= m) throw std::domain_error("letter out of range");
    if (letter > 0) {
      Perm t = identity_perm(m);
      std::swap(t[p], t[p + 1]);
      fs.push_back(std::move(t));
    } else {
      // σ^{-1} = Δ^{-1} · (Δ σ^{-1}); migrate the Δ^{-1} past all factors.
      nf.inf -= 1;
      for (Perm& f : fs) f = tau(f, d);
      Perm r(m);
      for (int x = 0; x < m; ++x) {
        int y = d[x];
        if (y == p)
          y = p + 1;
        else if (y == p + 1)
          y = p;
        r[x] = y;
      }
      fs.push_back(std::move(r));
    }
  }

  // Fixpoint of local left-weighting; every slide strictly decreases
  // sum_j j*|F_j|, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop identities and migrate Δ factors to the power counter.
    for (size_t j = 0; j < fs.size();) {
      if (is_identity(fs[j])) {
        fs.erase(fs.begin() + j);
        changed = true;
      } else if (fs[j] == d) {
        for (size_t i = 0; i < j; ++i) fs[i] = tau(fs[i], d);
        fs.erase(fs.begin() + j);
        nf.inf += 1;
        changed = true;
      } else {
        ++j;
      }
    }
    for (size_t j = 0; j + 1 < fs.size(); ++j)
      if (make_left_weighted(fs[j], fs[j + 1])) changed = true;
  }
  return nf;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  return normalize(a) == normalize(b);
}

std::vector<int> permutation_braid_word(const Perm& p) {
  Perm q = p;
  int m = static_cast<int>(q.size());
  std::vector<int> word;
  bool more = true;
  while (more) {
    more = false;
    for (int i = 0; i + 1 < m; ++i) {
      if (q[i] > q[i + 1]) {
        // q = σ_{i+1} · q' in application order: emit the letter, strip it.
        word.push_back(i + 1);
        std::swap(q[i], q[i + 1]);
        more = true;
        break;
      }
    }
  }
  return word;
}

BraidWord normal_form_word(const NormalForm& nf) {
  int m = nf.strands;
  BraidWord w{m, {}};
  BraidWord delta = half_twist(m, 1, m);
  if (nf.inf < 0) delta = inverse(delta);
  for (long long k = 0; k < std::abs(nf.inf); ++k) w = w * delta;
  for (const Perm& f : nf.factors) {
    std::vector<int> fw = permutation_braid_word(f);
    w.letters.insert(w.letters.end(), fw.begin(), fw.end());
  }
  return w;
}

namespace {

void push_reduced(std::vector<int>& word, int letter) {
  if (!word.empty() && word.back() == -letter)
    word.pop_back();
  else
    word.push_back(letter);
}

void append_word(std::vector<int>& out, const std::vector<int>& w, bool inv) {
  if (!inv) {
    for (int l : w) push_reduced(out, l);
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
  }
}

}  // namespace

std::vector<std::vector<int>> artin_action_images(const BraidWord& w) {
  int m = w.strands;
  std::vector<std::vector<int>> img(m);
  for (int i = 0; i < m; ++i) img[i] = {i + 1};
  // Apply the automorphism of each letter in application order:
  //   σ_i:     x_i ↦ x_i x_{i+1} x_i^{-1},  x_{i+1} ↦ x_i
  //   σ_i^{-1}: x_i ↦ x_{i+1},              x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
  // Substitution happens inside the current images.
  for (int letter : w.letters) {
    int i = std::abs(letter) - 1;
    std::vector<int> xi, xi1;  // new images of generators i, i+1
    if (letter > 0) {
      // x_i x_{i+1} x_i^{-1} and x_i in terms of the OLD generators: but we
      // compose automorphisms, so rewrite every stored image by substituting
      // the letter's action for generators i, i+1.
      xi = {i + 1, i + 2};
      append_word(xi, {i + 1}, true);
      xi1 = {i + 1};
    } else {
      xi = {i + 2};
      xi1 = {-(i + 2), i + 1, i + 2};
      std::vector<int> red;
      for (int l : xi1) push_reduced(red, l);
      xi1 = red;
    }
    for (auto& word : img) {
      std::vector<int> out;
      for (int l : word) {
        int g = std::abs(l);
        bool neg = l < 0;
        const std::vector<int>* rep = nullptr;
        if (g == i + 1)
          rep = &xi;
        else if (g == i + 2)
          rep = &xi1;
        if (!rep) {
          push_reduced(out, l);
        } else {
          append_word(out, *rep, neg);
        }
      }
      word = std::move(out);
    }
  }
  return img;
}

}  // namespace plumbfill
