// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qrev/families.hpp"
#include "qrev/numerics.hpp"

using namespace qrev;

namespace {

Interval iv(long lo_num, long lo_den, long hi_num, long hi_den) {
  return Interval{rat(lo_num, lo_den), rat(hi_num, hi_den)};
}

Interval iv(long lo, long hi) { return Interval{rat(lo), rat(hi)}; }

BoxSupport support1(std::vector<Interval> intervals) {
  std::vector<Box> boxes;
  for (Interval& i : intervals) boxes.push_back(Box{std::move(i)});
  return make_box_support(1, std::move(boxes));
}

// Independent reference: a spec fails exactly when two boxes of different
// members, each of positive measure in all coordinates, overlap with
// positive measure in every one of the d leading coordinates.
bool oracle_ok(const ReversedFamilySpec& spec) {
  auto box_measure_positive = [](const Box& b) {
    for (const Interval& i : b)
      if (!(i.hi - i.lo > 0)) return false;
    return true;
  };
  for (std::size_t m = 0; m < spec.members.size(); ++m) {
    for (std::size_t n = m + 1; n < spec.members.size(); ++n) {
      for (const Box& a : spec.members[m].boxes) {
        if (!box_measure_positive(a)) continue;
        for (const Box& b : spec.members[n].boxes) {
          if (!box_measure_positive(b)) continue;
          Rational volume = 1;
          for (int k = 0; k < spec.d; ++k) {
            const Rational lo =
                a[static_cast<std::size_t>(k)].lo > b[static_cast<std::size_t>(k)].lo
                    ? a[static_cast<std::size_t>(k)].lo
                    : b[static_cast<std::size_t>(k)].lo;
            const Rational hi =
                a[static_cast<std::size_t>(k)].hi < b[static_cast<std::size_t>(k)].hi
                    ? a[static_cast<std::size_t>(k)].hi
                    : b[static_cast<std::size_t>(k)].hi;
            volume *= hi - lo > 0 ? hi - lo : Rational(0);
          }
          if (volume > 0) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("disjoint intervals pass, overlapping ones fail with a witness") {
  ReversedFamilySpec good = make_family_spec(
      1, 1, {support1({iv(0, 1)}), support1({iv(2, 3)})});
  CHECK(check_shift_disjoint(good).ok);

  ReversedFamilySpec bad = make_family_spec(
      1, 1, {support1({iv(0, 1)}), support1({iv(1, 2, 3, 2)})});
  DisjointCheck check = check_shift_disjoint(bad);
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.witness.has_value());
  CHECK(check.witness->member_i == 0);
  CHECK(check.witness->member_j == 1);
  CHECK(check.witness->overlap.size() == 1);
  CHECK(check.witness->overlap[0].lo == rat(1, 2));
  CHECK(check.witness->overlap[0].hi == rat(1));
}

TEST_CASE("touching intervals overlap in measure zero only") {
  ReversedFamilySpec touching = make_family_spec(
      1, 1, {support1({iv(0, 1)}), support1({iv(1, 2)})});
  CHECK(check_shift_disjoint(touching).ok);
  CHECK(b1_family_check({iv(0, 1), iv(1, 2)}));
  CHECK_FALSE(b1_family_check({iv(0, 2), iv(1, 3)}));
}

TEST_CASE("measure-zero boxes do not count") {
  // A degenerate slab has no mass, so it cannot collide.
  Box degenerate{iv(0, 0), iv(0, 5)};
  Box solid{iv(0, 1), iv(0, 1)};
  ReversedFamilySpec spec = make_family_spec(
      2, 2,
      {make_box_support(2, {degenerate}), make_box_support(2, {solid})});
  CHECK(check_shift_disjoint(spec).ok);
}

TEST_CASE("only the leading d coordinates matter") {
  // Same first coordinate, separated second coordinate.
  Box a{iv(0, 1), iv(0, 1)};
  Box b{iv(0, 1), iv(2, 3)};
  std::vector<BoxSupport> members{make_box_support(2, {a}),
                                  make_box_support(2, {b})};

  // Shifting the free second coordinate can slide b onto a.
  CHECK_FALSE(check_shift_disjoint(make_family_spec(2, 1, members)).ok);
  // With both coordinates pinned the supports are genuinely disjoint.
  CHECK(check_shift_disjoint(make_family_spec(2, 2, members)).ok);
}

TEST_CASE("product families concatenate heads with a shared tail") {
  BoxSupport head0 = support1({iv(0, 1)});
  BoxSupport head1 = support1({iv(2, 3)});
  BoxSupport tail = support1({iv(-5, 5)});

  ReversedFamilySpec spec = product_family({head0, head1}, tail);
  CHECK(spec.s_A == 2);
  CHECK(spec.d == 1);
  CHECK(spec.members.size() == 2);
  CHECK(spec.members[0].boxes[0].size() == 2);
  CHECK(check_shift_disjoint(spec).ok);

  BoxSupport overlapping = support1({iv(1, 2, 5, 2)});
  CHECK_THROWS_AS(product_family({head0, overlapping}, tail), Error);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(make_family_spec(1, 1, {support1({iv(0, 1)})}), Error);
  CHECK_THROWS_AS(
      make_family_spec(1, 2, {support1({iv(0, 1)}), support1({iv(2, 3)})}),
      Error);
  CHECK_THROWS_AS(make_box_support(1, {Box{iv(1, 0)}}), Error);
  CHECK_THROWS_AS(
      make_family_spec(2, 1, {support1({iv(0, 1)}), support1({iv(2, 3)})}),
      Error);
}

TEST_CASE("seeded equivalence against the measure oracle") {
  auto rng = seeded_rng(71);
  std::uniform_int_distribution<int> endpoint(-4, 4);
  std::uniform_int_distribution<int> denom(1, 3);
  std::uniform_int_distribution<int> box_count(1, 2);
  std::uniform_int_distribution<int> dim_pick(1, 2);

  auto random_box = [&](int dim) {
    Box b;
    for (int k = 0; k < dim; ++k) {
      Rational lo = rat(endpoint(rng), denom(rng));
      Rational hi = rat(endpoint(rng), denom(rng));
      if (hi < lo) std::swap(lo, hi);
      b.push_back(Interval{lo, hi});
    }
    return b;
  };

  int violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int s_a = dim_pick(rng);
    const int d = std::min(s_a, dim_pick(rng));
    std::vector<BoxSupport> members;
    for (int m = 0; m < 3; ++m) {
      std::vector<Box> boxes;
      const int nb = box_count(rng);
      for (int b = 0; b < nb; ++b) boxes.push_back(random_box(s_a));
      members.push_back(make_box_support(s_a, std::move(boxes)));
    }
    ReversedFamilySpec spec = make_family_spec(s_a, d, std::move(members));
    const bool got = check_shift_disjoint(spec).ok;
    CHECK(got == oracle_ok(spec));
    if (!got) ++violations;
  }
  // The sweep must exercise both outcomes.
  CHECK(violations > 20);
  CHECK(violations < 200);
}
