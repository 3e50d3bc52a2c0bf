#include "mcg.hpp"

#include <algorithm>

namespace plumbfill {

Curve convex_curve(int m, int lo, int hi) {
  if (lo < 1 || hi > m || lo > hi)
    throw std::domain_error("convex_curve: invalid core block");
  Curve c;
  c.m = m;
  c.beta.strands = m;
  c.lo = lo;
  c.hi = hi;
  return c;
}

std::vector<int> enclosed_holes(const Curve& c) {
  Perm p = permutation(c.beta);
  std::vector<int> holes;
  for (int j = c.lo; j <= c.hi; ++j) holes.push_back(p[j - 1] + 1);
  std::sort(holes.begin(), holes.end());
  return holes;
}

BraidWord twist_word(const Curve& c) {
  BraidWord delta2 = half_twist(c.m, c.lo, c.hi);
  delta2 = delta2 * delta2;
  return inverse(c.beta) * delta2 * c.beta;
}

MappingClassRecord identity_record(int m) {
  MappingClassRecord r;
  r.m = m;
  r.braid_part = normalize(BraidWord{m, {}});
  r.twist_counts.assign(m, 0);
  return r;
}

MappingClassRecord dehn_twist_record(const Curve& c) {
  MappingClassRecord r;
  r.m = c.m;
  BraidWord tw = twist_word(c);
  if (!is_pure(tw)) throw std::logic_error("Dehn twist braid is not pure");
  r.braid_part = normalize(tw);
  r.twist_counts.assign(c.m, 0);
  for (int h : enclosed_holes(c)) r.twist_counts[h - 1] = 1;
  return r;
}

MappingClassRecord compose(const MappingClassRecord& a,
                           const MappingClassRecord& b) {
  if (a.m != b.m) throw std::domain_error("record hole counts differ");
  // Composition multiplies braid parts and adds counts; we re-normalize from
  // words (cheap at our sizes, avoids a factor-level multiplication routine).
  MappingClassRecord r;
  r.m = a.m;
  r.braid_part = normalize(normal_form_word(a.braid_part) *
                           normal_form_word(b.braid_part));
  r.twist_counts = a.twist_counts;
  for (int i = 0; i < r.m; ++i) r.twist_counts[i] += b.twist_counts[i];
  return r;
}

MappingClassRecord product_record(int m, const std::vector<Curve>& cycles) {
  BraidWord total{m, {}};
  std::vector<long long> counts(m, 0);
  for (const Curve& c : cycles) {
    if (c.m != m) throw std::domain_error("curve hole counts differ");
    total = total * twist_word(c);
    for (int h : enclosed_holes(c)) counts[h - 1] += 1;
  }
  MappingClassRecord r;
  r.m = m;
  r.braid_part = normalize(total);
  r.twist_counts = std::move(counts);
  return r;
}

bool records_equal(const MappingClassRecord& a, const MappingClassRecord& b) {
  return a.m == b.m && a.braid_part == b.braid_part &&
         a.twist_counts == b.twist_counts;
}

bool curve_equal(const Curve& a, const Curve& b) {
  if (a.m != b.m) throw std::domain_error("curve hole counts differ");
  if (a.hi - a.lo != b.hi - b.lo) return false;
  if (a.hi == a.lo)  // boundary-parallel: twist braids are trivial
    return enclosed_holes(a) == enclosed_holes(b);
  return braids_equal(twist_word(a), twist_word(b));
}

bool curves_disjoint(const Curve& a, const Curve& b) {
  if (a.m != b.m) throw std::domain_error("curve hole counts differ");
  BraidWord ta = twist_word(a), tb = twist_word(b);
  return braids_equal(ta * tb, tb * ta);
}

}  // namespace plumbfill
