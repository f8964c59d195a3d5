// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/tunnell.hpp"

#include <cmath>

namespace cnl::tunnell {

namespace {

bool is_square(int64 v, int64* root) {
  if (v < 0) return false;
  int64 r = static_cast<int64>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  *root = r;
  return r * r == v;
}

}  // namespace

int64 count_reps(int64 target, const std::array<int64, 3>& coeffs) {
  if (target < 1) throw error("representation target must be >= 1");
  const auto [c1, c2, c3] = coeffs;
  int64 count = 0;
  for (int64 x = 0; c1 * x * x <= target; ++x) {
    int64 rx = target - c1 * x * x;
    for (int64 y = 0; c2 * y * y <= rx; ++y) {
      int64 rem = rx - c2 * y * y;
      if (rem % c3) continue;
      int64 z;
      if (!is_square(rem / c3, &z)) continue;
      count += (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
    }
  }
  return count;
}

tunnell_counts tunnell_vanishing(const arith::curve_input& input) {
  tunnell_counts tc;
  tc.n = input.n;
  if (input.pcase == arith::parity_case::odd) {
    tc.a_count = count_reps(input.n, {2, 1, 32});
    tc.b_count = count_reps(input.n, {2, 1, 8});
  } else {
    tc.a_count = count_reps(input.m, {4, 1, 32});
    tc.b_count = count_reps(input.m, {4, 1, 8});
  }
  tc.vanishing = (2 * tc.a_count == tc.b_count);
  return tc;
}

}  // namespace cnl::tunnell
