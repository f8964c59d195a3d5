// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// Ternary-form representation counts: an independent combinatorial
// criterion for the vanishing of the central L-value.  For odd n the
// counts are over 2x^2 + y^2 + 32z^2 and 2x^2 + y^2 + 8z^2 at n; for
// n = 2m over 4x^2 + y^2 + 32z^2 and 4x^2 + y^2 + 8z^2 at m.  The
// L-value vanishes exactly when twice the first count equals the
// second.

#ifndef CNL_TUNNELL_HPP
#define CNL_TUNNELL_HPP

#include <array>
#include <cstdint>

#include "cnl/arith.hpp"

namespace cnl::tunnell {

using arith::int64;

struct tunnell_counts {
  int64 n = 0;
  int64 a_count = 0;
  int64 b_count = 0;
  bool vanishing = false;  // 2 * a_count == b_count
};

// #{(x,y,z) in Z^3 : c1 x^2 + c2 y^2 + c3 z^2 = target}, exhaustive.
// target >= 1.
int64 count_reps(int64 target, const std::array<int64, 3>& coeffs);

tunnell_counts tunnell_vanishing(const arith::curve_input& input);

}  // namespace cnl::tunnell

#endif  // CNL_TUNNELL_HPP
