#include "wiring.hpp"

#include <algorithm>
#include <numeric>

namespace plumbfill {

int WiringDiagram::point_count() const {
  int n = 0;
  for (const auto& e : events) n += e.is_point ? 1 : 0;
  return n;
}

void validate_diagram(const WiringDiagram& w) {
  if (w.strands < 1) throw std::domain_error("diagram needs at least 1 strand");
  for (const auto& e : w.events) {
    if (e.is_point) {
      if (e.lo < 1 || e.hi > w.strands || e.lo > e.hi)
        throw std::domain_error("point event block out of range");
    } else {
      if (e.braid.strands != w.strands)
        throw std::domain_error("braid event strand count mismatch");
      permutation(e.braid);  // validates letters
    }
  }
}

std::vector<Curve> vanishing_cycles(const WiringDiagram& w) {
  validate_diagram(w);
  std::vector<Curve> cycles;
  BraidWord phi{w.strands, {}};  // φ_j so far, application order
  for (const auto& e : w.events) {
    if (!e.is_point) {
      phi = phi * e.braid;
      continue;
    }
    Curve c;
    c.m = w.strands;
    c.beta = inverse(phi);
    c.lo = e.lo;
    c.hi = e.hi;
    cycles.push_back(c);
    // Passing the point contributes Δ_J^{-1} to the next φ.
    phi = phi * inverse(half_twist(w.strands, e.lo, e.hi));
  }
  return cycles;
}

std::vector<int> hole_weights(const WiringDiagram& w) {
  validate_diagram(w);
  std::vector<int> at(w.strands);  // at[p] = wire currently at position p
  std::iota(at.begin(), at.end(), 0);
  std::vector<int> weights(w.strands, 0);
  for (const auto& e : w.events) {
    if (e.is_point) {
      for (int p = e.lo - 1; p <= e.hi - 1; ++p) weights[at[p]]++;
      std::reverse(at.begin() + (e.lo - 1), at.begin() + e.hi);
    } else {
      for (int letter : e.braid.letters) {
        int p = std::abs(letter) - 1;
        std::swap(at[p], at[p + 1]);
      }
    }
  }
  return weights;
}

MappingClassRecord circumnavigation_monodromy(const WiringDiagram& w) {
  validate_diagram(w);
  int m = w.strands;

  // Collapse the event list into β_0, J_1, β_1, ..., J_n (ignoring a braid
  // after the last point, which only re-marks the reference fiber).
  std::vector<BraidWord> betas;
  std::vector<std::pair<int, int>> points;
  betas.push_back(BraidWord{m, {}});
  for (const auto& e : w.events) {
    if (e.is_point) {
      points.emplace_back(e.lo, e.hi);
      betas.push_back(BraidWord{m, {}});
    } else {
      betas.back() = betas.back() * e.braid;
    }
  }
  int n = static_cast<int>(points.size());

  BraidWord word{m, {}};
  for (int j = 0; j < n; ++j) {
    word = word * betas[j];
    BraidWord dj = half_twist(m, points[j].first, points[j].second);
    word = word * dj;
    if (j == n - 1) word = word * dj;  // innermost point gets the full twist
  }
  for (int j = n - 1; j >= 0; --j) {
    if (j < n - 1)
      word = word * half_twist(m, points[j].first, points[j].second);
    word = word * inverse(betas[j]);
  }

  MappingClassRecord r;
  r.m = m;
  r.braid_part = normalize(word);
  std::vector<int> hw = hole_weights(w);
  r.twist_counts.assign(hw.begin(), hw.end());
  return r;
}

}  // namespace plumbfill
