#pragma once

// Braided wiring diagrams: alternating braids and consecutive marked-point
// events; extraction of ordered vanishing cycles and the circumnavigation
// monodromy.
//
// A trailing braid after the last event only re-marks the reference fiber:
// it appears in neither the vanishing cycles nor the total-monodromy formula,
// so both extractors ignore it.

#include "mcg.hpp"

#include <vector>

namespace plumbfill {

struct WiringEvent {
  bool is_point = false;
  BraidWord braid;  // valid when !is_point
  int lo = 0, hi = 0;  // point block, 1-based inclusive, when is_point

  static WiringEvent braid_event(BraidWord b) {
    WiringEvent e;
    e.braid = std::move(b);
    return e;
  }
  static WiringEvent point_event(int lo, int hi) {
    WiringEvent e;
    e.is_point = true;
    e.lo = lo;
    e.hi = hi;
    return e;
  }
};

struct WiringDiagram {
  int strands = 1;
  std::vector<WiringEvent> events;  // time order (leftmost first)

  int point_count() const;
};

// Throws std::domain_error on invalid blocks or strand mismatches.
void validate_diagram(const WiringDiagram& w);

// V_j = Curve(conjugator φ_j^{-1}, core J_j) where, in application order,
// φ_j = β_0 · Δ_1^{-1} · β_1 · ... · Δ_{j-1}^{-1} · β_{j-1}.
std::vector<Curve> vanishing_cycles(const WiringDiagram& w);

// Total monodromy by circumnavigating the disk of events:
// β_0 Δ_1 β_1 ... Δ_{n-1} β_{n-1} Δ_n² β_{n-1}^{-1} Δ_{n-1} ... Δ_1 β_0^{-1}
// (application order), with twist counts = incidence-matrix row-sum
// contributions per hole.
MappingClassRecord circumnavigation_monodromy(const WiringDiagram& w);

// Points per strand (= future incidence-matrix row sums).
std::vector<int> hole_weights(const WiringDiagram& w);

}  // namespace plumbfill
