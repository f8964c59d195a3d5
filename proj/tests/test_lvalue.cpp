// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <doctest.h>

#include "cnl/lvalue.hpp"

using namespace cnl;
using arith::int64;
using hpc::real;

namespace {

real from_digits(const char* s, mpfr_prec_t prec) {
  real r(prec);
  mpfr_set_str(r.raw(), s, 10, MPFR_RNDN);
  return r;
}

// Reference values, 36-42 digits.
constexpr const char* kL1 =
    "0.655514388573029952616209897472779853420689";
constexpr const char* kL2 =
    "0.927037338650685959216925173597630023108799";
constexpr const char* kL10 = "1.65833480552274157802615122539352122";
constexpr const char* kL17 = "2.54376947124591143396446257043178521";
constexpr const char* kTheta17 = "8.82421120685418375804729509391554006";
constexpr const char* kBound1 =
    "1.08643481121330801457531612151022345707021";
constexpr const char* kBound5 =
    "3.24919794164825393652257774383807311841309";

lvalue::lvalue_report report_for(int64 n, long bits = 128) {
  hpc::precision_context ctx(bits);
  return lvalue::central_lvalue(arith::validate_curve(n), ctx);
}

}  // namespace

TEST_CASE("central L-value for n = 1") {
  lvalue::lvalue_report rep = report_for(1);
  CHECK(rep.b == 0);
  CHECK(rep.tau_offset == 0);
  CHECK(rep.tau.d == 2);
  CHECK(rep.vanishing == lvalue::vanishing_verdict::nonzero);
  real ref = from_digits(kL1, 256);
  // the 42-digit reference string itself is good to ~2^-136
  CHECK(hpc::abs(rep.lvalue - ref) <=
        hpc::err_add(rep.err, hpc::err_pow2(-130)));
}

TEST_CASE("central L-value for n = 2 goes through tau'") {
  lvalue::lvalue_report rep = report_for(2);
  CHECK(rep.b == 0);
  CHECK(rep.tau_offset == 1);
  CHECK(rep.tau.b == 1);
  CHECK(rep.tau.d == 2);
  CHECK(rep.vanishing == lvalue::vanishing_verdict::nonzero);
  real ref = from_digits(kL2, 256);
  CHECK(hpc::abs(rep.lvalue - ref) <=
        hpc::err_add(rep.err, hpc::err_pow2(-130)));
}

TEST_CASE("vanishing cases") {
  for (int64 n : {5, 13, 34, 41}) {
    lvalue::lvalue_report rep = report_for(n);
    CHECK(rep.vanishing == lvalue::vanishing_verdict::zero);
    CHECK_FALSE(rep.escalated);
  }
}

TEST_CASE("frozen nonvanishing values") {
  lvalue::lvalue_report r10 = report_for(10);
  CHECK(hpc::abs(r10.lvalue - from_digits(kL10, 256)) <=
        hpc::err_add(r10.err, hpc::err_pow2(-110)));
  lvalue::lvalue_report r17 = report_for(17);
  CHECK(hpc::abs(r17.lvalue - from_digits(kL17, 256)) <=
        hpc::err_add(r17.err, hpc::err_pow2(-110)));
  CHECK(hpc::abs(r17.theta_abs - from_digits(kTheta17, 256)) <=
        hpc::err_add(hpc::err_scale(r17.theta_err, 2), hpc::err_pow2(-110)));
}

TEST_CASE("invalid inputs propagate") {
  hpc::precision_context ctx(128);
  CHECK_THROWS_AS(arith::validate_curve(6), arith::bad_prime_factor_error);
}

TEST_CASE("predicted Sha collapses to 1 for n = 1") {
  hpc::precision_context ctx(128);
  lvalue::lvalue_report rep =
      lvalue::predicted_sha(arith::validate_curve(1), ctx);
  REQUIRE(rep.sha_rounded.has_value());
  CHECK(*rep.sha_rounded == 1);
  CHECK(rep.sha_integral);
  CHECK(rep.sha_square);
  real one = real::of(1L, 192);
  CHECK(hpc::abs(rep.sha_predicted - one) <= hpc::err_pow2(-100));
}

TEST_CASE("predicted Sha for n = 17 is the perfect square 4") {
  hpc::precision_context ctx(128);
  lvalue::lvalue_report rep =
      lvalue::predicted_sha(arith::validate_curve(17), ctx);
  REQUIRE(rep.sha_rounded.has_value());
  CHECK(*rep.sha_rounded == 4);
  CHECK(rep.sha_integral);
  CHECK(rep.sha_square);
}

TEST_CASE("predicted Sha refuses vanishing L") {
  hpc::precision_context ctx(128);
  CHECK_THROWS_AS(lvalue::predicted_sha(arith::validate_curve(5), ctx),
                  lvalue::vanishing_lvalue_error);
}

TEST_CASE("theta lower bound reference values and monotonicity") {
  hpc::precision_context ctx(128);
  real b1 = lvalue::theta_lower_bound(arith::validate_curve(1), ctx);
  CHECK(hpc::abs(b1 - from_digits(kBound1, 256)) <= hpc::err_pow2(-100));
  real b5 = lvalue::theta_lower_bound(arith::validate_curve(5), ctx);
  CHECK(hpc::abs(b5 - from_digits(kBound5, 256)) <= hpc::err_pow2(-100));
  // monotone in n at fixed divisor count
  real b13 = lvalue::theta_lower_bound(arith::validate_curve(13), ctx);
  CHECK(b13 > b5);
  real b17 = lvalue::theta_lower_bound(arith::validate_curve(17), ctx);
  CHECK(b17 > b13);
}

TEST_CASE("congruence classification") {
  hpc::precision_context ctx(128);
  CHECK(lvalue::classify_congruent(arith::validate_curve(5), ctx) ==
        lvalue::congruence_verdict::congruent_predicted);
  CHECK(lvalue::classify_congruent(arith::validate_curve(41), ctx) ==
        lvalue::congruence_verdict::congruent_predicted);
  CHECK(lvalue::classify_congruent(arith::validate_curve(1), ctx) ==
        lvalue::congruence_verdict::not_congruent);
  CHECK(lvalue::classify_congruent(arith::validate_curve(17), ctx) ==
        lvalue::congruence_verdict::not_congruent);
  CHECK(lvalue::classify_congruent(arith::validate_curve(34), ctx) ==
        lvalue::congruence_verdict::congruent_predicted);
}

TEST_CASE("even case depends on b only modulo 2 m^2") {
  hpc::precision_context ctx(128);
  arith::curve_input input = arith::validate_curve(10);
  int64 m = input.m;
  int64 b = arith::sqrt_minus_one(m, arith::parity_case::even);
  arith::cm_point tau{b + m * m, 2 * m * m};
  arith::cm_point tau_alt{b + 2 * m * m + m * m, 2 * m * m};
  hpc::bounded_complex v1 = theta::eval(theta::chi_kind{m}, tau, ctx);
  hpc::bounded_complex v2 = theta::eval(theta::chi_kind{m}, tau_alt, ctx);
  CHECK(hpc::abs(hpc::abs(v1.value) - hpc::abs(v2.value)) <=
        hpc::err_add(v1.err, v2.err));
}

TEST_CASE("doubling precision stays inside the coarser error bound") {
  for (int64 n : {13, 17}) {
    lvalue::lvalue_report lo = report_for(n, 128);
    lvalue::lvalue_report hi = report_for(n, 256);
    CHECK(hpc::abs(lo.lvalue - hi.lvalue) <= lo.err);
    CHECK(lo.vanishing == hi.vanishing);
  }
}

TEST_CASE("alternative even-route diagnostic matches the primary route") {
  hpc::precision_context ctx(128);
  for (int64 n : {2, 10, 26}) {
    arith::curve_input input = arith::validate_curve(n);
    lvalue::even_diagnostic d =
        lvalue::even_alternative_diagnostic(input, ctx);
    lvalue::lvalue_report rep = lvalue::central_lvalue(input, ctx);
    // same CM magnitude through either character
    CHECK(hpc::abs(d.alt_theta_abs - rep.theta_abs) <=
          hpc::err_add(d.alt_err, hpc::err_scale(rep.theta_err, 2)));
    // so L / alt^2 reproduces pi/(sqrt2 n)
    CHECK(hpc::abs(d.ratio - d.expected_ratio) <= hpc::err_pow2(-100));
  }
  CHECK_THROWS_AS(
      lvalue::even_alternative_diagnostic(arith::validate_curve(5),
                                          hpc::precision_context(128)),
      error);
}
