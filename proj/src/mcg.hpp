#pragma once

// Planar mapping classes rel boundary, modeled as (pure braid, per-hole
// boundary-twist counts); simple closed curves on the holed disk as
// conjugated convex curves; Dehn twists and factorization products.

#include "braid.hpp"

#include <vector>

namespace plumbfill {

// The curve β(A_J): image of the convex curve around the consecutive holes
// J = {lo..hi} under the braid β (applied to the disk).
struct Curve {
  int m = 1;        // hole count
  BraidWord beta;   // conjugator, application order
  int lo = 1;       // core block, 1-based inclusive
  int hi = 1;

  bool operator==(const Curve&) const = default;
};

Curve convex_curve(int m, int lo, int hi);  // identity conjugator

// Holes enclosed by the curve: the image of the core block under the
// conjugator's permutation.  Sorted, 1-based.
std::vector<int> enclosed_holes(const Curve& c);

// The Dehn twist about the curve, as a braid word: β^{-1} · Δ_J² · β in
// application order (= β ∘ Δ² ∘ β^{-1} functionally).
BraidWord twist_word(const Curve& c);

struct MappingClassRecord {
  int m = 1;
  NormalForm braid_part;              // must be pure
  std::vector<long long> twist_counts;  // per hole

  bool operator==(const MappingClassRecord&) const = default;
};

MappingClassRecord identity_record(int m);
MappingClassRecord dehn_twist_record(const Curve& c);

// Product over the list: the first cycle's twist is applied first.
MappingClassRecord product_record(int m, const std::vector<Curve>& cycles);
MappingClassRecord compose(const MappingClassRecord& a,
                           const MappingClassRecord& b);

bool records_equal(const MappingClassRecord& a, const MappingClassRecord& b);

// Isotopy test: equal twist braids, with the hole identity guard for |J| = 1
// (boundary-parallel curves have trivial twist braids).
bool curve_equal(const Curve& a, const Curve& b);

// Geometric disjointness up to isotopy: the two twist braids commute.
bool curves_disjoint(const Curve& a, const Curve& b);

}  // namespace plumbfill
