#include "helpers.hpp"

#include <doctest.h>

using namespace plumbfill;

TEST_CASE("enclosed holes of convex and conjugated curves") {
  CHECK(enclosed_holes(convex_curve(4, 2, 3)) == std::vector<int>{2, 3});
  Curve c{3, BraidWord{3, {2}}, 1, 2};  // sigma_2 pushes hole 2 to 3
  CHECK(enclosed_holes(c) == std::vector<int>{1, 3});
}

TEST_CASE("twist words are pure and invariant under core full twists") {
  auto c = convex_curve(3, 1, 2);
  CHECK(is_pure(twist_word(c)));
  // Conjugating by the twist itself does not move the curve.
  auto delta2 = half_twist(3, 1, 2) * half_twist(3, 1, 2);
  Curve same{3, delta2, 1, 2};
  CHECK(curve_equal(c, same));
  Curve other{3, BraidWord{3, {2}}, 1, 2};
  CHECK_FALSE(curve_equal(c, other));
}

TEST_CASE("boundary-parallel curves compare by enclosed hole") {
  Curve a = convex_curve(3, 2, 2);
  Curve b{3, BraidWord{3, {1}}, 1, 1};  // sigma_1 sends hole 1 to 2
  CHECK(curve_equal(a, b));
  CHECK_FALSE(curve_equal(a, convex_curve(3, 1, 1)));
}

TEST_CASE("disjointness via commuting twists") {
  CHECK(curves_disjoint(convex_curve(4, 1, 2), convex_curve(4, 3, 4)));
  CHECK(curves_disjoint(convex_curve(4, 1, 2), convex_curve(4, 1, 4)));
  CHECK_FALSE(curves_disjoint(convex_curve(3, 1, 2), convex_curve(3, 2, 3)));
}

TEST_CASE("records compose and detect boundary twists") {
  int m = 3;
  auto t1 = dehn_twist_record(convex_curve(m, 1, 1));
  CHECK(t1.braid_part.is_identity());
  CHECK(t1.twist_counts == std::vector<long long>{1, 0, 0});

  auto t12 = dehn_twist_record(convex_curve(m, 1, 2));
  auto prod = compose(t1, t12);
  CHECK(records_equal(prod, product_record(m, {convex_curve(m, 1, 1),
                                               convex_curve(m, 1, 2)})));
  // Disjoint twists commute as records.
  auto t3 = dehn_twist_record(convex_curve(m, 3, 3));
  CHECK(records_equal(compose(t12, t3), compose(t3, t12)));
  // Crossing twists do not.
  auto t23 = dehn_twist_record(convex_curve(m, 2, 3));
  CHECK_FALSE(records_equal(compose(t12, t23), compose(t23, t12)));
}

TEST_CASE("full-disk twist equals the record of Delta squared") {
  int m = 3;
  auto full = dehn_twist_record(convex_curve(m, 1, m));
  CHECK(full.braid_part == normalize(half_twist(m, 1, m) * half_twist(m, 1, m)));
}
