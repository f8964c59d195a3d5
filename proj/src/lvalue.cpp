// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/lvalue.hpp"

#include <cmath>
#include <string>

#include "cnl/tunnell.hpp"

namespace cnl::lvalue {

namespace {

using hpc::complex;
using hpc::precision_context;
using hpc::real;

struct theta_cm {
  int64 b;
  int64 offset;
  arith::cm_point tau;
  theta::eval_record rec;

  theta_cm(int64 b_, int64 off, arith::cm_point t, theta::eval_record r)
      : b(b_), offset(off), tau(t), rec(std::move(r)) {}
};

// The theta CM value entering the L-value formula for this input.
theta_cm eval_theta_cm(const arith::curve_input& input,
                       const precision_context& ctx) {
  int64 m = input.m;
  int64 b = arith::sqrt_minus_one(m, arith::parity_case::even);
  int64 offset = (input.pcase == arith::parity_case::even) ? m * m : 0;
  arith::cm_point tau{b + offset, 2 * m * m};
  theta::eval_record rec = theta::eval_detailed(
      theta::chi_kind{m}, tau.to_complex(ctx.work() + 64), ctx);
  return theta_cm(b, offset, tau, std::move(rec));
}

// One evaluation pass at a fixed context.
lvalue_report compute_once(const arith::curve_input& input,
                           const precision_context& ctx) {
  long w = ctx.work();
  lvalue_report rep;
  rep.input = input;

  theta_cm cm = eval_theta_cm(input, ctx);
  rep.b = cm.b;
  rep.tau_offset = cm.offset;
  rep.tau = cm.tau;
  rep.theta_abs = hpc::abs(cm.rec.value.value);
  rep.theta_err = cm.rec.value.err;

  real pi_w = hpc::pi(w);
  real sqrt2 = hpc::sqrt(real::of(2L, w));
  real theta_sq = rep.theta_abs * rep.theta_abs;
  real denom = (input.pcase == arith::parity_case::odd)
                   ? real::of(4 * input.n, w) * sqrt2
                   : real::of(input.n, w) * sqrt2;
  rep.lvalue = pi_w * theta_sq / denom;

  // |(|t|+e)^2 - |t|^2| <= 2|t|e + e^2, scaled by pi/denom.
  real e = cm.rec.value.err;
  real tmag = hpc::err_abs(rep.theta_abs);
  real quad = hpc::err_add(hpc::err_mul(hpc::err_scale(tmag, 2), e),
                           hpc::err_mul(e, e));
  real factor = hpc::err_up(pi_w / denom);
  rep.err = hpc::err_add(hpc::err_mul(quad, factor),
                         hpc::err_mul(hpc::err_abs(rep.lvalue),
                                      hpc::err_pow2(-w + 4)));

  // Verdict: zero against max(16 err, 2^{-p/4} S); nonzero against half
  // the unconditional lower bound.
  real zero_cut = hpc::err_scale(cm.rec.value.err, 16);
  real scale_cut = hpc::err_mul(hpc::err_abs(cm.rec.scale),
                                hpc::err_pow2(-ctx.bits() / 4));
  if (scale_cut > zero_cut) zero_cut = scale_cut;
  real bound = theta_lower_bound(input, ctx);
  real half_bound = hpc::ldexp2(bound, -1);
  if (rep.theta_abs <= zero_cut)
    rep.vanishing = vanishing_verdict::zero;
  else if (rep.theta_abs >= half_bound)
    rep.vanishing = vanishing_verdict::nonzero;
  else
    rep.vanishing = vanishing_verdict::indeterminate;
  return rep;
}

}  // namespace

lvalue_report central_lvalue(const arith::curve_input& input,
                             const precision_context& ctx) {
  lvalue_report rep = compute_once(input, ctx);
  if (rep.vanishing == vanishing_verdict::indeterminate) {
    rep = compute_once(input, ctx.doubled());
    rep.escalated = true;
  }
  return rep;
}

hpc::real theta_lower_bound(const arith::curve_input& input,
                            const precision_context& ctx) {
  long w = ctx.work();
  real w_over_pi = lemniscate(ctx).value.re / hpc::pi(w);
  int64 scaled = (input.pcase == arith::parity_case::odd) ? 2 * input.n
                                                          : input.n / 2;
  real radix = hpc::root(real::of(scaled, w), 4);
  int64 divisors = arith::sigma0(
      input.pcase == arith::parity_case::odd ? input.n : input.m);
  return radix * hpc::sqrt(w_over_pi) * real::of(divisors, w);
}

void fill_sha(lvalue_report& rep, const precision_context& ctx) {
  if (rep.vanishing != vanishing_verdict::nonzero)
    throw vanishing_lvalue_error(
        "predicted Sha is undefined when the L-value vanishes (n = " +
        std::to_string(rep.input.n) + ")");
  long w = ctx.work();
  const arith::curve_input& input = rep.input;
  real pi_w = hpc::pi(w);
  hpc::bounded_complex lem = lemniscate(ctx);
  real theta_sq = rep.theta_abs * rep.theta_abs;
  real s0 = real::of(
      arith::sigma0(input.pcase == arith::parity_case::odd ? input.n
                                                           : input.m),
      w);
  real sha(w);
  if (input.pcase == arith::parity_case::odd) {
    real denom = hpc::sqrt(real::of(2 * input.n, w)) * lem.value.re * s0 * s0;
    sha = pi_w * theta_sq / denom;
  } else {
    real denom = hpc::sqrt(real::of(input.n, w)) * lem.value.re * s0 * s0;
    sha = hpc::sqrt(real::of(2L, w)) * pi_w * theta_sq / denom;
  }
  rep.sha_predicted = sha;

  // Error growth through the formula: relative error of theta doubles,
  // plus the lemniscate's own relative error.
  real rel_theta = hpc::err_div(rep.theta_err, hpc::err_abs(rep.theta_abs));
  real rel = hpc::err_add(hpc::err_scale(rel_theta, 2),
                          hpc::err_div(lem.err, hpc::err_abs(lem.value.re)));
  real sha_err = hpc::err_add(hpc::err_mul(hpc::err_abs(sha), rel),
                              hpc::err_pow2(-w + 8));

  real rounded(w);
  mpfr_round(rounded.raw(), sha.raw());
  int64 ri = rounded.to_long();
  real gap = hpc::abs(sha - rounded);
  real tol = hpc::err_scale(sha_err, 16);
  real floor_tol = hpc::err_pow2(-ctx.bits() / 4);
  if (floor_tol > tol) tol = floor_tol;
  rep.sha_integral = (ri > 0) && (gap <= tol);
  rep.sha_rounded = ri;
  int64 isq = static_cast<int64>(std::llround(std::sqrt(static_cast<double>(ri))));
  rep.sha_square = rep.sha_integral &&
                   (isq * isq == ri || (isq + 1) * (isq + 1) == ri ||
                    (isq - 1) * (isq - 1) == ri);
}

lvalue_report predicted_sha(const arith::curve_input& input,
                            const precision_context& ctx) {
  lvalue_report rep = central_lvalue(input, ctx);
  fill_sha(rep, ctx);
  return rep;
}

congruence_verdict classify_congruent(const arith::curve_input& input,
                                      const precision_context& ctx) {
  lvalue_report rep = central_lvalue(input, ctx);
  real bound = theta_lower_bound(input, ctx);
  real margin = bound - rep.theta_err.at(ctx.work());
  bool below_bound = rep.theta_abs < margin;
  tunnell::tunnell_counts counts = tunnell::tunnell_vanishing(input);

  if (below_bound && rep.vanishing == vanishing_verdict::zero &&
      counts.vanishing)
    return congruence_verdict::congruent_predicted;
  if (!below_bound && rep.vanishing == vanishing_verdict::nonzero &&
      !counts.vanishing)
    return congruence_verdict::not_congruent;
  return congruence_verdict::indeterminate;
}

even_diagnostic even_alternative_diagnostic(const arith::curve_input& input,
                                            const precision_context& ctx) {
  if (input.pcase != arith::parity_case::even)
    throw error("the alternative formulation applies to even n only");
  long w = ctx.work();
  int64 m = input.m;
  int64 b = arith::sqrt_minus_one(m, arith::parity_case::even);
  arith::cm_point quarter{b, 8 * m * m};  // tau_m / 4
  hpc::bounded_complex alt = theta::eval(theta::chi_kind{4 * m},
                                         quarter.to_complex(w + 64), ctx);
  lvalue_report rep = central_lvalue(input, ctx);

  even_diagnostic d{hpc::abs(alt.value), alt.err, real(w), real(w)};
  real alt_sq = d.alt_theta_abs * d.alt_theta_abs;
  d.ratio = rep.lvalue / alt_sq;
  d.expected_ratio =
      hpc::pi(w) / (hpc::sqrt(real::of(2L, w)) * real::of(input.n, w));
  return d;
}

}  // namespace cnl::lvalue
