// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/zeros.hpp"

#include <atomic>
#include <cassert>
#include <string>
#include <thread>

namespace cnl::zeros {

namespace {

using hpc::complex;
using hpc::precision_context;
using hpc::real;

}  // namespace

atkin_lehner_data atkin_lehner_data::for_level(int64 n) {
  atkin_lehner_data d;
  d.n = n;
  d.b = arith::sqrt_minus_one(n, arith::parity_case::even);
  // b^2 + 1 = lambda n^2 exactly; b < 2n^2 keeps b^2 within __int128.
  __int128 b2 = static_cast<__int128>(d.b) * d.b + 1;
  __int128 n2 = static_cast<__int128>(n) * n;
  assert(b2 % n2 == 0);
  d.lambda = static_cast<int64>(b2 / n2);
  return d;
}

hpc::complex atkin_lehner_apply(const atkin_lehner_data& d,
                                const hpc::complex& tau) {
  mpfr_prec_t p = tau.prec();
  complex num = real::of(2 * d.b, p) * tau - complex::of(d.lambda, 0, p);
  complex den = real::of(4 * d.n * d.n, p) * tau - complex::of(2 * d.b, 0, p);
  if (mpfr_zero_p(den.re.raw()) && mpfr_zero_p(den.im.raw()))
    throw error("involution pole: tau is not in the upper half-plane");
  return num / den;
}

al_residual verify_atkin_lehner(const arith::curve_input& input,
                                const hpc::complex& tau,
                                const precision_context& ctx) {
  if (input.pcase != arith::parity_case::odd)
    throw error("the functional equation applies to odd n");
  long w = ctx.work();
  int64 n = input.n;
  atkin_lehner_data d = atkin_lehner_data::for_level(n);

  complex tau_w(tau.re.at(w + 64), tau.im.at(w + 64));
  complex sigma_tau = atkin_lehner_apply(d, tau_w);

  theta::eval_record lhs =
      theta::eval_detailed(theta::chi_kind{n}, sigma_tau, ctx);
  theta::eval_record rhs_theta =
      theta::eval_detailed(theta::chi_kind{n}, tau_w, ctx);

  // sqrt(n^2 tau - b/2): imaginary part n^2 Im(tau) > 0, so the
  // principal branch is evaluated away from its cut.
  complex root_arg(w);
  mpfr_mul_si(root_arg.re.raw(), tau.re.raw(), n * n, MPFR_RNDN);
  real half_b = hpc::ldexp2(real::of(d.b, w), -1);
  mpfr_sub(root_arg.re.raw(), root_arg.re.raw(), half_b.raw(), MPFR_RNDN);
  mpfr_mul_si(root_arg.im.raw(), tau.im.raw(), n * n, MPFR_RNDN);
  assert(mpfr_sgn(root_arg.im.raw()) > 0);
  complex root = hpc::sqrt(root_arg);

  // eps = 1-i when n = 1 (mod 8), i-1 when n = 5 (mod 8).
  complex eps = (input.n_mod_8 == 1) ? complex::of(1, -1, w)
                                     : complex::of(-1, 1, w);
  complex rhs = eps * root * rhs_theta.value.value;
  real residual = hpc::abs(lhs.value.value - rhs);

  real factor = hpc::err_up(hpc::abs(eps * root));
  real tol = hpc::err_add(lhs.value.err,
                          hpc::err_mul(factor, rhs_theta.value.err));
  // Slack for the Moebius transform and multiplication roundings.
  real slack = hpc::err_mul(
      hpc::err_add(hpc::err_abs(hpc::abs(lhs.value.value)),
                   hpc::err_abs(hpc::abs(rhs))),
      hpc::err_pow2(-w + 8));
  tol = hpc::err_add(tol, slack);
  return al_residual{residual, tol};
}

zero_order_report vanishing_order(const arith::curve_input& input,
                                  const precision_context& ctx) {
  if (input.pcase != arith::parity_case::odd)
    throw error("vanishing order is computed for odd n only");
  long w = ctx.work();
  int64 n = input.n;
  int64 b = arith::sqrt_minus_one(n, arith::parity_case::even);
  arith::cm_point tau_n{b, 2 * n * n};
  constexpr int J = 4;

  auto attempt = [&](int N, int64 radius_den) -> zero_order_report {
    // radius r = 1/(radius_den * n^2); samples tau_n + r e^{2 pi i t/N}.
    mpfr_prec_t pe = w + 64;
    complex center = tau_n.to_complex(pe);
    real r = real::of_ratio(1, radius_den, pe);
    mpfr_div_si(r.raw(), r.raw(), n * n, MPFR_RNDN);

    real two_pi = hpc::ldexp2(hpc::pi(pe), 1);
    std::vector<complex> samples;
    samples.reserve(N);
    real sample_err = hpc::err_zero();
    for (int t = 0; t < N; ++t) {
      real ang(pe);
      mpfr_mul_si(ang.raw(), two_pi.raw(), t, MPFR_RNDN);
      mpfr_div_si(ang.raw(), ang.raw(), N, MPFR_RNDN);
      complex point = center + r * hpc::unit_phase(ang);
      theta::eval_record rec =
          theta::eval_detailed(theta::chi_kind{n}, point, ctx);
      samples.push_back(rec.value.value);
      if (rec.value.err > sample_err) sample_err = rec.value.err;
    }

    zero_order_report rep;
    rep.n = n;
    rep.tau = tau_n;
    rep.radius_den = radius_den * n * n;
    rep.samples = N;
    for (int j = 0; j <= J; ++j) {
      complex acc = complex::of(0, 0, w);
      for (int t = 0; t < N; ++t) {
        real ang(pe);
        mpfr_mul_si(ang.raw(), two_pi.raw(), -static_cast<long>(j) * t % N,
                    MPFR_RNDN);
        mpfr_div_si(ang.raw(), ang.raw(), N, MPFR_RNDN);
        acc = acc + samples[t] * hpc::unit_phase(ang);
      }
      real mag = hpc::abs(acc);
      mpfr_div_si(mag.raw(), mag.raw(), N, MPFR_RNDN);
      rep.coeff_mags.push_back(mag);
    }

    real mx = rep.coeff_mags[0];
    for (const real& m : rep.coeff_mags)
      if (m > mx) mx = m;
    real delta = hpc::ldexp2(mx, -(ctx.bits() / 4));
    // Nothing above the noise floor means the order exceeded J.
    real floor_cut = hpc::err_scale(sample_err, 8);
    if (mx <= floor_cut.at(w)) {
      rep.order = -1;
      return rep;
    }
    rep.order = -1;
    for (int j = 0; j <= J; ++j) {
      if (rep.coeff_mags[j] > delta) {
        rep.order = j;
        break;
      }
    }
    return rep;
  };

  zero_order_report rep = attempt(32, 16);
  if (rep.order < 0) {
    rep = attempt(64, 32);
    rep.escalated = true;
  }
  if (rep.order < 0)
    throw order_undetermined_error(
        "all circle coefficients below threshold for n = " +
        std::to_string(n));
  return rep;
}

scan_record scan_one(int64 n, const precision_context& ctx, bool with_order) {
  scan_record rec;
  rec.n = n;
  arith::curve_input input;
  try {
    input = arith::validate_curve(n);
  } catch (const error& e) {
    rec.valid = false;
    rec.skip_reason = e.what();
    return rec;
  }
  rec.valid = true;
  try {
    lvalue::lvalue_report rep = lvalue::central_lvalue(input, ctx);
    rec.counts = tunnell::tunnell_vanishing(input);
    rec.cross_ok =
        (rep.vanishing == lvalue::vanishing_verdict::zero) ==
        rec.counts->vanishing &&
        rep.vanishing != lvalue::vanishing_verdict::indeterminate;
    rep.tunnell_consistent = rec.cross_ok;
    if (rep.vanishing == lvalue::vanishing_verdict::nonzero)
      lvalue::fill_sha(rep, ctx);
    if (with_order && input.pcase == arith::parity_case::odd)
      rec.order = vanishing_order(input, ctx);
    rec.report = std::move(rep);
  } catch (const error& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<scan_record> mock_heegner_scan(int64 from, int64 to,
                                           const precision_context& ctx,
                                           int jobs) {
  std::vector<int64> ns;
  for (int64 n = std::max<int64>(1, from); n <= to; ++n) ns.push_back(n);
  return scan_ns(ns, ctx, jobs);
}

std::vector<scan_record> scan_ns(const std::vector<int64>& ns,
                                 const precision_context& ctx, int jobs) {
  std::vector<scan_record> out(ns.size());
  if (ns.empty()) return out;

  if (jobs <= 0)
    jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(ns.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ns.size()) break;
      out[i] = scan_one(ns[i], ctx, true);
    }
    mpfr_free_cache();
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace cnl::zeros
