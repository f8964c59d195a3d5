// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/identities.hpp"

#include <numeric>
#include <string>

#include "cnl/lvalue.hpp"
#include "cnl/theta.hpp"

namespace cnl::identities {

namespace {

using hpc::bounded_complex;
using hpc::complex;
using hpc::precision_context;
using hpc::real;

residual_item make_item(std::string name, const real& residual,
                        const real& tol) {
  return residual_item{std::move(name), residual, tol};
}

bounded_complex eval_at(const theta::theta_kind& kind, int64 num, int64 den,
                        const precision_context& ctx) {
  return theta::eval(kind, arith::cm_point{num, den}, ctx);
}

}  // namespace

std::vector<residual_item> verify_gauss(const precision_context& ctx) {
  long w = ctx.work();
  std::vector<residual_item> items;
  real pi_w = hpc::pi(w);
  bounded_complex lem = hpc::lemniscate(ctx);
  real sqrt_w_pi = hpc::sqrt(lem.value.re / pi_w);
  real sqrt_w_pi_err = hpc::err_add(
      hpc::err_div(lem.err, hpc::err_abs(lem.value.re)),
      hpc::err_pow2(-w + 4));  // relative-ish; sqrt halves it, keep as is

  // (i) theta((1+i)/2) = sqrt(varpi/pi)
  bounded_complex th_half = eval_at(theta::jacobi_kind{}, 1, 2, ctx);
  items.push_back(make_item(
      "theta((1+i)/2) = sqrt(varpi/pi)",
      hpc::abs(th_half.value - complex(sqrt_w_pi, real::of(0L, w))),
      hpc::err_add(th_half.err, sqrt_w_pi_err)));

  // (ii) theta_chi4(i/8) = sqrt(varpi/pi)
  bounded_complex th_chi4 = eval_at(theta::chi_kind{4}, 0, 8, ctx);
  items.push_back(make_item(
      "theta_chi4(i/8) = sqrt(varpi/pi)",
      hpc::abs(th_chi4.value - complex(sqrt_w_pi, real::of(0L, w))),
      hpc::err_add(th_chi4.err, sqrt_w_pi_err)));

  // (iii) 2 sqrt(L(E_1,1)/pi) = theta((1+i)/2)
  lvalue::lvalue_report L1 =
      lvalue::central_lvalue(arith::validate_curve(1), ctx);
  real lhs3 = hpc::ldexp2(hpc::sqrt(L1.lvalue / pi_w), 1);
  real tol3 = hpc::err_add(
      hpc::err_mul(hpc::err_abs(lhs3),
                   hpc::err_div(L1.err, hpc::err_abs(L1.lvalue))),
      th_half.err);
  items.push_back(make_item("2 sqrt(L(E_1,1)/pi) = theta((1+i)/2)",
                            hpc::abs(lhs3 - th_half.value.re), tol3));

  // (iv) 2^{3/4} sqrt(L(E_2,1)/pi) = theta_chi4(i/8)
  lvalue::lvalue_report L2 =
      lvalue::central_lvalue(arith::validate_curve(2), ctx);
  real pow234 = hpc::root(real::of(8L, w), 4);  // 8^{1/4} = 2^{3/4}
  real lhs4 = pow234 * hpc::sqrt(L2.lvalue / pi_w);
  real tol4 = hpc::err_add(
      hpc::err_mul(hpc::err_abs(lhs4),
                   hpc::err_div(L2.err, hpc::err_abs(L2.lvalue))),
      th_chi4.err);
  items.push_back(make_item("2^(3/4) sqrt(L(E_2,1)/pi) = theta_chi4(i/8)",
                            hpc::abs(lhs4 - th_chi4.value.re), tol4));

  // (v) theta(i/2)^2 = sqrt2 theta((1+i)/2)^2
  bounded_complex th_i2 = eval_at(theta::jacobi_kind{}, 0, 2, ctx);
  complex lhs5 = th_i2.value * th_i2.value;
  complex rhs5 = hpc::sqrt(real::of(2L, w)) * (th_half.value * th_half.value);
  real tol5 = hpc::err_add(
      hpc::err_scale(hpc::err_mul(hpc::err_abs(hpc::abs(th_i2.value)),
                                  th_i2.err),
                     4),
      hpc::err_scale(hpc::err_mul(hpc::err_abs(hpc::abs(th_half.value)),
                                  th_half.err),
                     4));
  items.push_back(make_item("theta(i/2)^2 = sqrt2 theta((1+i)/2)^2",
                            hpc::abs(lhs5 - rhs5), tol5));

  // (vi) |theta_chi4(i/8)| = |theta_chi4((1+i)/8)|; the values differ
  // by the unit phase e^{i pi/4}.
  bounded_complex th_chi4_shift = eval_at(theta::chi_kind{4}, 1, 8, ctx);
  items.push_back(make_item(
      "|theta_chi4(i/8)| = |theta_chi4((1+i)/8)|",
      hpc::abs(hpc::abs(th_chi4.value) - hpc::abs(th_chi4_shift.value)),
      hpc::err_add(th_chi4.err, th_chi4_shift.err)));

  return items;
}

int64 even_root_for_modulus(int64 modulus) {
  if (modulus % 2 == 0)
    throw precondition_violated_error("modulus must be odd");
  int64 r = arith::root_of_minus_one(modulus);
  // modulus odd: r and modulus - r have opposite parity.
  return (r % 2 == 0) ? r : modulus - r;
}

residual_item verify_factorization(int64 a, int64 a1, int64 D, int64 b,
                                   const precision_context& ctx) {
  if (a < 1 || a1 < 1 || D < 1)
    throw precondition_violated_error("a, a1, D must be positive");
  __int128 M = static_cast<__int128>(D) * a * a * a1;
  __int128 chk = (static_cast<__int128>(b) * b + 1) % M;
  if (chk != 0)
    throw precondition_violated_error(
        "b^2 + 1 is not divisible by D a^2 a1");

  long w = ctx.work();
  int64 a2a1 = a * a * a1;
  complex lhs = complex::of(0, 0, w);
  real lhs_err = hpc::err_zero();
  for (int64 r = 0; r < D; ++r) {
    bounded_complex first =
        eval_at(theta::char_kind{{(a * r) % D, D}, {1, 2}}, b, a2a1, ctx);
    bounded_complex second =
        eval_at(theta::char_kind{{r % D, D}, {1, 2}}, b, a1, ctx);
    lhs = lhs + first.value * conj(second.value);
    real mag1 = hpc::err_abs(hpc::abs(first.value));
    real mag2 = hpc::err_abs(hpc::abs(second.value));
    lhs_err = hpc::err_add(
        lhs_err, hpc::err_add(hpc::err_mul(mag2, first.err),
                              hpc::err_mul(mag1, second.err)));
  }
  real pref = hpc::sqrt(real::of(2L, w) / real::of(D * D * a1, w));
  lhs = pref * lhs;
  lhs_err = hpc::err_mul(hpc::err_up(pref), lhs_err);

  // big_theta(D (b+i)/(2a)) evaluated at the exact point (Db + Di)/(2a):
  // use the complex form to keep D/(2a) exact.
  complex tau_rhs(w + 64);
  mpfr_set_si(tau_rhs.re.raw(), D * b, MPFR_RNDN);
  mpfr_div_si(tau_rhs.re.raw(), tau_rhs.re.raw(), 2 * a, MPFR_RNDN);
  mpfr_set_si(tau_rhs.im.raw(), D, MPFR_RNDN);
  mpfr_div_si(tau_rhs.im.raw(), tau_rhs.im.raw(), 2 * a, MPFR_RNDN);
  bounded_complex rhs = theta::eval(theta::big_theta_kind{}, tau_rhs, ctx);

  real tol = hpc::err_add(lhs_err, rhs.err);
  tol = hpc::err_add(tol, hpc::err_mul(hpc::err_abs(hpc::abs(rhs.value)),
                                       hpc::err_pow2(-w + 8)));
  std::string name = "factorization(a=" + std::to_string(a) +
                     ",a1=" + std::to_string(a1) + ",D=" + std::to_string(D) +
                     ",b=" + std::to_string(b) + ")";
  return make_item(std::move(name), hpc::abs(lhs - rhs.value), tol);
}

residual_item verify_corthetaf(int64 n_prime, int64 a, int64 a1, int64 b,
                               const precision_context& ctx) {
  if (n_prime < 1 || a < 1 || a1 < 1)
    throw precondition_violated_error("n', a, a1 must be positive");
  __int128 M = static_cast<__int128>(n_prime) * a * a * a1;
  if ((static_cast<__int128>(b) * b + 1) % M != 0)
    throw precondition_violated_error(
        "b^2 + 1 is not divisible by n' a^2 a1");

  long w = ctx.work();
  bounded_complex lhs = eval_at(theta::divisor_sum_kind{n_prime}, b, a, ctx);

  // Moebius constant term: 1/n' for n' = 1, zero otherwise.
  long moebius_sum = 0;
  for (auto [d, sign] : arith::squarefree_divisors(n_prime))
    moebius_sum += sign;
  complex rhs = complex::of(moebius_sum, 0, w);
  mpfr_div_si(rhs.re.raw(), rhs.re.raw(), n_prime, MPFR_RNDN);

  real rhs_err = hpc::err_zero();
  int64 a2a1 = a * a * a1;
  for (int64 r = 1; r < n_prime; ++r) {
    if (std::gcd(r, n_prime) != 1) continue;
    bounded_complex first = eval_at(
        theta::f_ratio_kind{(a * r) % n_prime, n_prime}, b, a2a1, ctx);
    bounded_complex second =
        eval_at(theta::f_ratio_kind{r, n_prime}, b, a1, ctx);
    complex prod = first.value * conj(second.value);
    mpfr_div_si(prod.re.raw(), prod.re.raw(), n_prime, MPFR_RNDN);
    mpfr_div_si(prod.im.raw(), prod.im.raw(), n_prime, MPFR_RNDN);
    rhs = rhs + prod;
    real mag1 = hpc::err_abs(hpc::abs(first.value));
    real mag2 = hpc::err_abs(hpc::abs(second.value));
    real term_err = hpc::err_add(hpc::err_mul(mag2, first.err),
                                 hpc::err_mul(mag1, second.err));
    mpfr_div_si(term_err.raw(), term_err.raw(), n_prime, MPFR_RNDU);
    rhs_err = hpc::err_add(rhs_err, term_err);
  }

  real tol = hpc::err_add(lhs.err, rhs_err);
  tol = hpc::err_add(tol, hpc::err_mul(hpc::err_abs(hpc::abs(lhs.value)),
                                       hpc::err_pow2(-w + 8)));
  std::string name = "divisor-sum(n'=" + std::to_string(n_prime) +
                     ",a=" + std::to_string(a) + ",a1=" + std::to_string(a1) +
                     ",b=" + std::to_string(b) + ")";
  return make_item(std::move(name), hpc::abs(lhs.value - rhs), tol);
}

residual_item verify_lemtheta1(const hpc::complex& tau,
                               const precision_context& ctx) {
  long w = ctx.work();
  complex tau_w(tau.re.at(w + 64), tau.im.at(w + 64));
  complex quarter(tau_w.re, tau_w.im);
  mpfr_div_2si(quarter.re.raw(), quarter.re.raw(), 2, MPFR_RNDN);
  mpfr_div_2si(quarter.im.raw(), quarter.im.raw(), 2, MPFR_RNDN);
  complex half(tau_w.re, tau_w.im);
  mpfr_div_2si(half.re.raw(), half.re.raw(), 1, MPFR_RNDN);
  mpfr_div_2si(half.im.raw(), half.im.raw(), 1, MPFR_RNDN);

  bounded_complex big = theta::eval(theta::big_theta_kind{}, tau_w, ctx);
  bounded_complex odd = theta::eval(theta::odd_theta_kind{}, quarter, ctx);
  bounded_complex target = theta::eval(theta::big_theta_kind{}, half, ctx);

  real residual = hpc::abs(big.value + odd.value - target.value);
  real tol = hpc::err_add(hpc::err_add(big.err, odd.err), target.err);
  return make_item("big_theta(tau) + odd_theta(tau/4) = big_theta(tau/2)",
                   residual, tol);
}

}  // namespace cnl::identities
