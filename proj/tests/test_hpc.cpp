// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <doctest.h>

#include "cnl/hpc.hpp"
#include "oracles.hpp"

using namespace cnl;
using hpc::real;

namespace {

real from_digits(const char* s, mpfr_prec_t prec) {
  real r(prec);
  mpfr_set_str(r.raw(), s, 10, MPFR_RNDN);
  return r;
}

// 42-digit reference values.
constexpr const char* kLemniscate =
    "2.62205755429211981046483958989111941368275";
constexpr const char* kAgm1Sqrt2 =
    "1.19814023473559220743992249228032387822721";

}  // namespace

TEST_CASE("agm fixed point and symmetry") {
  hpc::precision_context ctx(128);
  for (double x : {1.0, 1.4142135, 3.75}) {
    real a = real::of(x, ctx.work());
    hpc::bounded_complex m = hpc::agm(a, a, ctx);
    CHECK(hpc::abs(m.value.re - a) <= m.err);
  }
  real one = real::of(1L, ctx.work());
  real rt2 = hpc::sqrt(real::of(2L, ctx.work()));
  real ab = hpc::agm(one, rt2, ctx).value.re;
  real ba = hpc::agm(rt2, one, ctx).value.re;
  CHECK(ab == ba);
}

TEST_CASE("agm(1, sqrt2) against the frozen reference") {
  hpc::precision_context ctx(128);
  hpc::bounded_complex m =
      hpc::agm(real::of(1L, ctx.work()),
               hpc::sqrt(real::of(2L, ctx.work())), ctx);
  real ref = from_digits(kAgm1Sqrt2, ctx.work());
  CHECK(hpc::abs(m.value.re - ref) <= hpc::err_add(m.err, hpc::err_pow2(-135)));
}

TEST_CASE("agm one-step invariance") {
  hpc::precision_context ctx(128);
  long w = ctx.work();
  real a = real::of(3L, w), b = real::of(1L, w);
  hpc::bounded_complex direct = hpc::agm(a, b, ctx);
  real mid = hpc::ldexp2(a + b, -1);
  real geo = hpc::sqrt(a * b);
  hpc::bounded_complex stepped = hpc::agm(mid, geo, ctx);
  CHECK(hpc::abs(direct.value.re - stepped.value.re) <=
        hpc::err_add(direct.err, stepped.err));
}

TEST_CASE("agm rejects nonpositive input") {
  hpc::precision_context ctx(128);
  CHECK_THROWS_AS(hpc::agm(real::of(0L, 128), real::of(1L, 128), ctx),
                  nonpositive_input_error);
  CHECK_THROWS_AS(hpc::agm(real::of(1L, 128), real::of(-2L, 128), ctx),
                  nonpositive_input_error);
}

TEST_CASE("lemniscate constant: frozen digits and quadrature oracle") {
  hpc::precision_context ctx(128);
  hpc::bounded_complex lem = hpc::lemniscate(ctx);
  real ref = from_digits(kLemniscate, ctx.work());
  CHECK(hpc::abs(lem.value.re - ref) <=
        hpc::err_add(lem.err, hpc::err_pow2(-135)));

  // Independent oracle: tanh-sinh quadrature of the defining integral,
  // required to match to at least 20 digits.
  real quad = oracles::lemniscate_by_quadrature(192);
  CHECK(hpc::abs(lem.value.re - quad) <= hpc::err_pow2(-70));
}

TEST_CASE("agm(1,sqrt2) times lemniscate equals pi") {
  hpc::precision_context ctx(128);
  long w = ctx.work();
  hpc::bounded_complex m =
      hpc::agm(real::of(1L, w), hpc::sqrt(real::of(2L, w)), ctx);
  hpc::bounded_complex lem = hpc::lemniscate(ctx);
  real prod = m.value.re * lem.value.re;
  real tol = hpc::err_add(
      hpc::err_mul(hpc::err_abs(lem.value.re), m.err),
      hpc::err_add(hpc::err_mul(hpc::err_abs(m.value.re), lem.err),
                   hpc::err_pow2(-w + 6)));
  CHECK(hpc::abs(prod - hpc::pi(w)) <= tol);
}

TEST_CASE("precision monotonicity: p=64 and p=256 agree far below 2^-60") {
  hpc::precision_context lo(64), hi(256);
  real a = hpc::lemniscate(lo).value.re;
  real b = hpc::lemniscate(hi).value.re;
  CHECK(hpc::abs(a - b) <= hpc::err_pow2(-60));
  // doubling precision moves the value by less than the coarser bound
  hpc::precision_context p1(128), p2(256);
  hpc::bounded_complex v1 = hpc::lemniscate(p1);
  hpc::bounded_complex v2 = hpc::lemniscate(p2);
  CHECK(hpc::abs(v1.value.re - v2.value.re) <= v1.err);
}

TEST_CASE("complex arithmetic and principal square root") {
  mpfr_prec_t p = 128;
  hpc::complex z(real::of(3L, p), real::of(4L, p));
  CHECK(hpc::abs(z).to_double() == doctest::Approx(5.0));

  hpc::complex w = hpc::sqrt(z);
  hpc::complex sq = w * w;
  CHECK(hpc::abs(sq - z).to_double() < 1e-30);
  CHECK(w.re.sign() > 0);  // principal branch: Re >= 0

  // negative real axis maps to the positive imaginary axis
  hpc::complex neg(real::of(-4L, p), real::of(0L, p));
  hpc::complex rt = hpc::sqrt(neg);
  CHECK(rt.im.to_double() == doctest::Approx(2.0));
  CHECK(std::abs(rt.re.to_double()) < 1e-30);

  // quadrant check below the cut
  hpc::complex below(real::of(-4L, p), real::of(-1L, p));
  CHECK(hpc::sqrt(below).im.sign() < 0);

  hpc::complex q = z / z;
  CHECK(q.re.to_double() == doctest::Approx(1.0));
  CHECK(std::abs(q.im.to_double()) < 1e-30);
}

TEST_CASE("precision context validates its domain") {
  CHECK_THROWS_AS(hpc::precision_context(32), std::invalid_argument);
  CHECK_THROWS_AS(hpc::precision_context(128, 4), std::invalid_argument);
  hpc::precision_context ctx(128);
  CHECK(ctx.work() == 192);
  CHECK(ctx.tail_exp2() == -160);
  CHECK(ctx.doubled().bits() == 256);
}

TEST_CASE("decimal serialization is deterministic") {
  real v = hpc::pi(192);
  CHECK(v.str(39) == v.str(39));
  CHECK(v.str(10) == "3.141592654");
}
