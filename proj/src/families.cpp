// Copyright 2026 The qrev developers.
//
// This source code is licensed under the Apache License, Version 2.0 found in
// the LICENSE file in the root directory of this source tree.

#include "qrev/families.hpp"

#include <algorithm>

namespace qrev {

namespace {

bool box_has_positive_measure(const Box& b) {
  for (const Interval& iv : b)
    if (!(iv.lo < iv.hi)) return false;
  return true;
}

// Strict overlap of the first d coordinates.
std::optional<Box> head_overlap(const Box& a, const Box& b, int d) {
  Box out;
  out.reserve(static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    const Rational lo = std::max(a[c].lo, b[c].lo);
    const Rational hi = std::min(a[c].hi, b[c].hi);
    if (!(lo < hi)) return std::nullopt;
    out.push_back({lo, hi});
  }
  return out;
}

}  // namespace

BoxSupport make_box_support(int dim, std::vector<Box> boxes) {
  if (dim < 0) fail(ErrorCode::InvalidShape, "negative support dimension");
  for (const Box& b : boxes) {
    if (static_cast<int>(b.size()) != dim)
      fail(ErrorCode::InvalidShape, "box dimension does not match support");
    for (const Interval& iv : b)
      if (iv.lo > iv.hi)
        fail(ErrorCode::InvalidParameter, "interval with lo > hi");
  }
  return BoxSupport{dim, std::move(boxes)};
}

ReversedFamilySpec make_family_spec(int s_A, int d,
                                    std::vector<BoxSupport> members) {
  if (s_A < 1) fail(ErrorCode::InvalidShape, "s_A must be positive");
  if (d < 1 || d > s_A)
    fail(ErrorCode::InvalidParameter,
         "noise-free coordinate count d must satisfy 0 < d <= s_A");
  if (members.size() < 2)
    fail(ErrorCode::InvalidParameter, "family needs at least two members");
  for (const BoxSupport& m : members)
    if (m.dim != s_A)
      fail(ErrorCode::DimensionMismatch,
           "member support dimension does not match s_A");
  return ReversedFamilySpec{s_A, d, std::move(members)};
}

DisjointCheck check_shift_disjoint(const ReversedFamilySpec& spec) {
  DisjointCheck out;
  // Boxes of measure zero carry no L2 weight and cannot create overlap.
  for (std::size_t i = 0; i < spec.members.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.members.size(); ++j) {
      const auto& bi = spec.members[i].boxes;
      const auto& bj = spec.members[j].boxes;
      for (std::size_t a = 0; a < bi.size(); ++a) {
        if (!box_has_positive_measure(bi[a])) continue;
        for (std::size_t b = 0; b < bj.size(); ++b) {
          if (!box_has_positive_measure(bj[b])) continue;
          auto ov = head_overlap(bi[a], bj[b], spec.d);
          if (ov) {
            out.ok = false;
            out.witness = DisjointWitness{static_cast<int>(i),
                                          static_cast<int>(j),
                                          static_cast<int>(a),
                                          static_cast<int>(b), *ov};
            return out;
          }
        }
      }
    }
  }
  out.ok = true;
  return out;
}

ReversedFamilySpec product_family(const std::vector<BoxSupport>& heads,
                                  const BoxSupport& tail) {
  if (heads.size() < 2)
    fail(ErrorCode::InvalidParameter, "family needs at least two members");
  const int d = heads[0].dim;
  if (d < 1) fail(ErrorCode::InvalidShape, "head supports must have dim >= 1");
  for (const BoxSupport& h : heads)
    if (h.dim != d)
      fail(ErrorCode::DimensionMismatch, "head supports have mixed dimensions");
  const int s_A = d + tail.dim;

  for (std::size_t i = 0; i < heads.size(); ++i)
    for (std::size_t j = i + 1; j < heads.size(); ++j)
      for (const Box& a : heads[i].boxes)
        for (const Box& b : heads[j].boxes)
          if (box_has_positive_measure(a) && box_has_positive_measure(b) &&
              head_overlap(a, b, d))
            fail(ErrorCode::NotDisjoint,
                 "head supports " + std::to_string(i) + " and " +
                     std::to_string(j) + " overlap");

  std::vector<Box> tails = tail.boxes;
  if (tail.dim == 0) tails = {Box{}};

  std::vector<BoxSupport> members;
  members.reserve(heads.size());
  for (const BoxSupport& h : heads) {
    std::vector<Box> boxes;
    for (const Box& hb : h.boxes) {
      for (const Box& tb : tails) {
        Box full = hb;
        full.insert(full.end(), tb.begin(), tb.end());
        boxes.push_back(std::move(full));
      }
    }
    members.push_back(make_box_support(s_A, std::move(boxes)));
  }
  return make_family_spec(s_A, d, std::move(members));
}

bool b1_family_check(const std::vector<Interval>& intervals) {
  if (intervals.size() < 2)
    fail(ErrorCode::InvalidParameter, "family needs at least two members");
  std::vector<BoxSupport> members;
  members.reserve(intervals.size());
  for (const Interval& iv : intervals)
    members.push_back(make_box_support(1, {Box{iv}}));
  return check_shift_disjoint(make_family_spec(1, 1, std::move(members))).ok;
}

}  // namespace qrev
