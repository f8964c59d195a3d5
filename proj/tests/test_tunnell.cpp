// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <doctest.h>

#include "cnl/lvalue.hpp"
#include "cnl/tunnell.hpp"

using namespace cnl;
using arith::int64;

TEST_CASE("count_reps on small targets") {
  CHECK(tunnell::count_reps(1, {2, 1, 32}) == 2);  // (0, ±1, 0)
  CHECK(tunnell::count_reps(5, {2, 1, 32}) == 0);
  CHECK(tunnell::count_reps(1, {2, 1, 8}) == 2);
  CHECK(tunnell::count_reps(2, {2, 1, 8}) == 2);   // (±1, 0, 0)
  CHECK(tunnell::count_reps(3, {2, 1, 8}) == 4);   // (±1, ±1, 0)
  CHECK_THROWS_AS(tunnell::count_reps(0, {2, 1, 32}), error);
}

TEST_CASE("count_reps sign-flip multiplicities") {
  // brute reference over the full signed box
  auto brute = [](int64 t, std::array<int64, 3> c) {
    int64 cnt = 0;
    for (int64 x = -t; x <= t; ++x)
      for (int64 y = -t; y <= t; ++y)
        for (int64 z = -t; z <= t; ++z)
          if (c[0] * x * x + c[1] * y * y + c[2] * z * z == t) ++cnt;
    return cnt;
  };
  for (int64 t : {1, 2, 3, 5, 9, 17, 25, 41}) {
    CHECK(tunnell::count_reps(t, {2, 1, 8}) == brute(t, {2, 1, 8}));
    CHECK(tunnell::count_reps(t, {2, 1, 32}) == brute(t, {2, 1, 32}));
    CHECK(tunnell::count_reps(t, {4, 1, 8}) == brute(t, {4, 1, 8}));
  }
}

TEST_CASE("vanishing criterion on reference inputs") {
  auto counts = [](int64 n) {
    return tunnell::tunnell_vanishing(arith::validate_curve(n));
  };
  tunnell::tunnell_counts c1 = counts(1);
  CHECK(c1.a_count == 2);
  CHECK(c1.b_count == 2);
  CHECK_FALSE(c1.vanishing);

  tunnell::tunnell_counts c5 = counts(5);
  CHECK(c5.a_count == 0);
  CHECK(c5.b_count == 0);
  CHECK(c5.vanishing);

  tunnell::tunnell_counts c13 = counts(13);
  CHECK(c13.a_count == 0);
  CHECK(c13.vanishing);

  tunnell::tunnell_counts c10 = counts(10);
  CHECK(c10.a_count == 4);
  CHECK(c10.b_count == 4);
  CHECK_FALSE(c10.vanishing);

  tunnell::tunnell_counts c17 = counts(17);
  CHECK(c17.a_count == 4);
  CHECK(c17.b_count == 16);
  CHECK_FALSE(c17.vanishing);

  tunnell::tunnell_counts c34 = counts(34);
  CHECK(c34.a_count == 4);
  CHECK(c34.b_count == 8);
  CHECK(c34.vanishing);

  tunnell::tunnell_counts c41 = counts(41);
  CHECK(c41.a_count == 16);
  CHECK(c41.b_count == 32);
  CHECK(c41.vanishing);
}

TEST_CASE("oracle agreement with the analytic verdict up to 100") {
  hpc::precision_context ctx(128);
  for (int64 n = 1; n <= 100; ++n) {
    arith::curve_input input;
    try {
      input = arith::validate_curve(n);
    } catch (const error&) {
      continue;
    }
    lvalue::lvalue_report rep = lvalue::central_lvalue(input, ctx);
    tunnell::tunnell_counts tc = tunnell::tunnell_vanishing(input);
    REQUIRE(rep.vanishing != lvalue::vanishing_verdict::indeterminate);
    CHECK((rep.vanishing == lvalue::vanishing_verdict::zero) == tc.vanishing);
  }
}
