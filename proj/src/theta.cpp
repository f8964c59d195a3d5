// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/theta.hpp"

#include <cmath>
#include <string>

namespace cnl::theta {

namespace {

using hpc::bounded_complex;
using hpc::complex;
using hpc::precision_context;
using hpc::real;

constexpr double ln2 = 0.6931471805599453;

// log2 of the tail majorant 2 e^{-c(K+1)^2} / (1 - e^{-c(2K+3)}).
double log2_tail_at(double c, double K) {
  double x = c * (2.0 * K + 3.0);
  double denom = (x > 700.0) ? 0.0 : std::log1p(-std::exp(-x));
  return (ln2 - c * (K + 1.0) * (K + 1.0) - denom) / ln2;
}

double im_as_double(const real& y) {
  long e = 0;
  double m = mpfr_get_d_2exp(&e, y.raw(), MPFR_RNDN);
  return std::ldexp(m, static_cast<int>(e));
}

real tail_as_real(double log2_tail) {
  real t(hpc::err_prec);
  mpfr_set_d(t.raw(), log2_tail, MPFR_RNDU);
  mpfr_exp2(t.raw(), t.raw(), MPFR_RNDU);
  return t;
}

struct series_out {
  complex value;
  real scale;  // sum over all k of |q|^{k^2} (or the char analogue)
  real tail;
  int64 K = 0;

  explicit series_out(mpfr_prec_t prec)
      : value(prec), scale(hpc::err_zero()), tail(hpc::err_zero()) {}
};

// Rounding allowance: each of the ~K summed terms carries a handful of
// roundings at working precision, all bounded by the positive majorant.
real rounding_allowance(const real& scale, int64 K, long w) {
  real r = hpc::err_mul(hpc::err_abs(scale), hpc::err_pow2(-w + 6));
  return hpc::err_scale(r, static_cast<long>(K) + 4);
}

eval_record assemble(series_out&& s, long w) {
  eval_record rec(s.value.prec());
  rec.K = s.K;
  rec.value.value = std::move(s.value);
  rec.value.err = hpc::err_add(s.tail, rounding_allowance(s.scale, s.K, w));
  rec.scale = std::move(s.scale);
  return rec;
}

void check_im(const complex& tau) {
  if (mpfr_sgn(tau.im.raw()) <= 0)
    throw nonpositive_im_error("theta series require Im(tau) > 0");
}

// q-expansion family, weight_scale = 1: chi-twisted (n >= 1) or plain
// (n = 0 meaning the untwisted series).
series_out sum_q_family(int64 n, const complex& tau,
                        const precision_context& ctx, int64 force_K) {
  check_im(tau);
  long w = ctx.work();
  truncation tr = truncation_K(tau.im, 1.0, ctx);
  if (force_K >= 0) {
    double c = 2.0 * 3.141592653589793 * im_as_double(tau.im);
    tr.K = force_K;
    tr.tail = tail_as_real(log2_tail_at(c, static_cast<double>(force_K)));
  }

  series_out out(w);
  q_power_ladder ladder(tau, 1.0, ctx);

  // k = 0 term: coefficient (0/n) = 1 exactly when n <= 1.
  long c0 = (n <= 1) ? 1 : 0;
  complex acc = complex::of(c0, 0, w);
  real scale(w);
  mpfr_set_si(scale.raw(), 1, MPFR_RNDN);

  // (k/n) + (-k/n) = (1 + (-1/n)) (k/n).  Two extra terms beyond the
  // chosen K leave the reported bound (computed at K) an overestimate.
  int two_sided = (n == 0) ? 2 : 1 + arith::kronecker(-1, n);
  for (int64 k = 1; k <= tr.K + 2; ++k) {
    ladder.advance();
    mpfr_fma(scale.raw(), real::of(2L, w).raw(), ladder.magnitude().raw(),
             scale.raw(), MPFR_RNDN);
    long coef = (n == 0) ? 2 : two_sided * arith::kronecker(k, n);
    if (coef == 0) continue;
    const complex& qk = ladder.value();
    mpfr_fma(acc.re.raw(), real::of(coef, w).raw(), qk.re.raw(), acc.re.raw(),
             MPFR_RNDN);
    mpfr_fma(acc.im.raw(), real::of(coef, w).raw(), qk.im.raw(), acc.im.raw(),
             MPFR_RNDN);
  }
  out.value = std::move(acc);
  out.scale = hpc::err_up(scale);
  out.tail = tr.tail;
  out.K = tr.K;
  return out;
}

// Characteristic series theta_[mu,nu], weight_scale = 1/2, summed over
// the symmetric index range [-K-1, K].
series_out sum_char(const rational& mu_in, const rational& nu,
                    const complex& tau, const precision_context& ctx,
                    int64 force_K) {
  check_im(tau);
  long w = ctx.work();
  mpfr_prec_t pe = tau.prec() + 32;
  truncation tr = truncation_K(tau.im, 0.5, ctx);
  if (force_K >= 0) {
    double c = 3.141592653589793 * im_as_double(tau.im);
    tr.K = force_K;
    tr.tail = tail_as_real(log2_tail_at(c, static_cast<double>(force_K)));
  }

  // Reduce mu into [0, 1): integer shifts of mu leave the series fixed.
  rational mu = mu_in;
  mu.num %= mu.den;
  if (mu.num < 0) mu.num += mu.den;

  real pi_e = hpc::pi(pe);

  // A = e^{pi i tau}; B = e^{2 pi i mu tau}; C = e^{pi i mu^2 tau};
  // U = e^{2 pi i nu}; P0 = e^{2 pi i nu mu}.
  auto scaled_tau = [&](long num, long den) {
    real re(pe), im(pe);
    mpfr_mul_si(re.raw(), tau.re.raw(), num, MPFR_RNDN);
    mpfr_div_si(re.raw(), re.raw(), den, MPFR_RNDN);
    mpfr_mul_si(im.raw(), tau.im.raw(), num, MPFR_RNDN);
    mpfr_div_si(im.raw(), im.raw(), den, MPFR_RNDN);
    return complex(std::move(re), std::move(im));
  };
  auto cexp_pi_i = [&](const complex& z) {
    // e^{pi i z} = e^{-pi Im z} (cos(pi Re z) + i sin(pi Re z))
    real ang = pi_e * z.re;
    real mag(pe);
    mpfr_mul(mag.raw(), pi_e.raw(), z.im.raw(), MPFR_RNDN);
    mpfr_neg(mag.raw(), mag.raw(), MPFR_RNDN);
    mpfr_exp(mag.raw(), mag.raw(), MPFR_RNDN);
    complex u = hpc::unit_phase(ang);
    return complex(mag * u.re, mag * u.im);
  };

  complex B = cexp_pi_i(scaled_tau(2 * mu.num, mu.den));
  complex Binv = cexp_pi_i(scaled_tau(-2 * mu.num, mu.den));
  complex C = cexp_pi_i(scaled_tau(mu.num * mu.num, mu.den * mu.den));

  auto unit_of = [&](long num, long den) {
    real ang(pe);
    mpfr_mul_si(ang.raw(), pi_e.raw(), 2 * num, MPFR_RNDN);
    mpfr_div_si(ang.raw(), ang.raw(), den, MPFR_RNDN);
    return hpc::unit_phase(ang);
  };
  complex U = unit_of(nu.num, nu.den);
  complex P0 = unit_of(nu.num * mu.num, nu.den * mu.den);

  complex W = (B * U);           // steps the n >= 0 side
  complex Wn = (Binv * conj(U)); // steps the n < 0 side (index j = -n)
  complex CP = C * P0;

  // Magnitudes: |A|^{k^2} from the ladder, |W| = e^{-2 pi mu y},
  // |Wn| = e^{+2 pi mu y}, |CP| = |C|.
  real absW = hpc::abs(W).at(w), absWn = hpc::abs(Wn).at(w);
  real absC = hpc::abs(C).at(w);

  q_power_ladder ladder(tau, 0.5, ctx);

  complex inner = complex::of(1, 0, w);  // k = 0: A^0 W^0
  real smag(w);
  mpfr_set_si(smag.raw(), 1, MPFR_RNDN);

  complex rpos = complex::of(1, 0, w), rneg = complex::of(1, 0, w);
  real mpos(w), mneg(w);
  mpfr_set_si(mpos.raw(), 1, MPFR_RNDN);
  mpfr_set_si(mneg.raw(), 1, MPFR_RNDN);

  // Overshoot by two index steps on each side; the bound reported below
  // is still the one computed at K.
  for (int64 k = 1; k <= tr.K + 3; ++k) {
    ladder.advance();
    rpos = rpos * W;
    rneg = rneg * Wn;
    mpos = mpos * absW;
    mneg = mneg * absWn;
    complex both = (k <= tr.K + 2) ? rpos + rneg : rneg;
    complex term = ladder.value() * both;
    inner = inner + term;
    real mboth = (k <= tr.K + 2) ? mpos + mneg : mneg;
    mpfr_fma(smag.raw(), ladder.magnitude().raw(), mboth.raw(), smag.raw(),
             MPFR_RNDN);
  }

  series_out out(w);
  out.value = CP * inner;
  out.scale = hpc::err_up(absC * smag);
  out.tail = tr.tail;
  out.K = tr.K;
  return out;
}

eval_record square_record(eval_record&& base) {
  eval_record rec(base.value.value.prec());
  rec.K = base.K;
  rec.value.value = base.value.value * base.value.value;
  // |(v+e)^2 - v^2| <= 2 S e + e^2 with S >= |v|.
  real cross = hpc::err_mul(hpc::err_scale(base.scale, 2), base.value.err);
  rec.value.err =
      hpc::err_add(cross, hpc::err_mul(base.value.err, base.value.err));
  rec.scale = hpc::err_mul(base.scale, base.scale);
  return rec;
}

eval_record divide_records(const eval_record& num, const eval_record& den) {
  eval_record rec(num.value.value.prec());
  rec.K = num.K;
  rec.value.value = num.value.value / den.value.value;
  real dmag = hpc::err_abs(hpc::abs(den.value.value));
  real floor(hpc::err_prec);
  mpfr_sub(floor.raw(), dmag.raw(), den.value.err.raw(), MPFR_RNDD);
  if (mpfr_sgn(floor.raw()) <= 0) {
    mpfr_set_inf(rec.value.err.raw(), 1);
    rec.scale = rec.value.err;
    return rec;
  }
  real vmag = hpc::err_abs(hpc::abs(rec.value.value));
  real num_part = hpc::err_add(num.value.err, hpc::err_mul(vmag, den.value.err));
  real e(hpc::err_prec);
  mpfr_div(e.raw(), num_part.raw(), floor.raw(), MPFR_RNDU);
  rec.value.err = e;
  rec.scale = hpc::err_add(vmag, e);
  return rec;
}

complex half_scaled(const complex& tau, int64 num) {
  real re(tau.prec()), im(tau.prec());
  mpfr_mul_si(re.raw(), tau.re.raw(), num, MPFR_RNDN);
  mpfr_div_2si(re.raw(), re.raw(), 1, MPFR_RNDN);
  mpfr_mul_si(im.raw(), tau.im.raw(), num, MPFR_RNDN);
  mpfr_div_2si(im.raw(), im.raw(), 1, MPFR_RNDN);
  return complex(std::move(re), std::move(im));
}

}  // namespace

truncation truncation_K(const real& im_tau, double weight_scale,
                        const precision_context& ctx) {
  if (mpfr_sgn(im_tau.raw()) <= 0)
    throw nonpositive_im_error("truncation_K requires Im(tau) > 0");
  double y = im_as_double(im_tau);
  double c = 2.0 * 3.141592653589793 * weight_scale * y;
  if (!(c > 0))
    throw nonpositive_im_error("Im(tau) underflows the truncation solver");
  double target = static_cast<double>(ctx.tail_exp2());

  double guess =
      std::sqrt(((-target + 2.0) * ln2 + 1.0) / c);
  int64 K = static_cast<int64>(guess) + 1;
  while (K > 0 && log2_tail_at(c, static_cast<double>(K - 1)) <= target) --K;
  while (log2_tail_at(c, static_cast<double>(K)) > target) ++K;

  truncation tr;
  tr.K = K;
  tr.tail = tail_as_real(log2_tail_at(c, static_cast<double>(K)));
  return tr;
}

q_power_ladder::q_power_ladder(const complex& tau, double weight_scale,
                               const precision_context& ctx)
    : qk2_(ctx.work()),
      qodd_(ctx.work()),
      q2_(ctx.work()),
      mk2_(ctx.work()),
      modd_(ctx.work()),
      m2_(ctx.work()) {
  mpfr_prec_t pe = tau.prec() + 32;
  long w = ctx.work();
  // q = e^{2 pi i ws tau}: 2*ws is 2 or 1, both exact scalings.
  int shift = (weight_scale == 1.0) ? 1 : 0;
  real pi_e = hpc::pi(pe);
  real ang(pe), mag(pe);
  mpfr_mul(ang.raw(), pi_e.raw(), tau.re.raw(), MPFR_RNDN);
  mpfr_mul_2si(ang.raw(), ang.raw(), shift, MPFR_RNDN);
  mpfr_mul(mag.raw(), pi_e.raw(), tau.im.raw(), MPFR_RNDN);
  mpfr_mul_2si(mag.raw(), mag.raw(), shift, MPFR_RNDN);
  mpfr_neg(mag.raw(), mag.raw(), MPFR_RNDN);
  mpfr_exp(mag.raw(), mag.raw(), MPFR_RNDN);
  complex u = hpc::unit_phase(ang);
  complex q(pe);
  mpfr_mul(q.re.raw(), mag.raw(), u.re.raw(), MPFR_RNDN);
  mpfr_mul(q.im.raw(), mag.raw(), u.im.raw(), MPFR_RNDN);

  qk2_ = complex::of(1, 0, w);
  qodd_ = complex(q.re.at(w), q.im.at(w));
  q2_ = (q * q);
  q2_ = complex(q2_.re.at(w), q2_.im.at(w));
  ++muls_;

  mpfr_set_si(mk2_.raw(), 1, MPFR_RNDN);
  modd_ = mag.at(w);
  m2_ = modd_ * modd_;
}

void q_power_ladder::advance() {
  qk2_ = qk2_ * qodd_;
  qodd_ = qodd_ * q2_;
  muls_ += 2;
  mk2_ = mk2_ * modd_;
  modd_ = modd_ * m2_;
  ++k_;
}

eval_record eval_detailed(const theta_kind& kind, const complex& tau,
                          const precision_context& ctx, int64 force_K) {
  long w = ctx.work();
  return std::visit(
      [&](const auto& k) -> eval_record {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, chi_kind>) {
          if (k.n < 1) throw out_of_domain_error("chi modulus must be >= 1");
          return assemble(sum_q_family(k.n, tau, ctx, force_K), w);
        } else if constexpr (std::is_same_v<T, jacobi_kind>) {
          return assemble(sum_q_family(0, tau, ctx, force_K), w);
        } else if constexpr (std::is_same_v<T, big_theta_kind>) {
          return square_record(
              assemble(sum_q_family(0, tau, ctx, force_K), w));
        } else if constexpr (std::is_same_v<T, odd_theta_kind>) {
          return square_record(
              assemble(sum_q_family(4, tau, ctx, force_K), w));
        } else if constexpr (std::is_same_v<T, char_kind>) {
          return assemble(sum_char(k.mu, k.nu, tau, ctx, force_K), w);
        } else if constexpr (std::is_same_v<T, f_ratio_kind>) {
          if (k.d < 1 || k.r < 0 || k.r >= k.d)
            throw out_of_domain_error("f_ratio requires 0 <= r < d");
          eval_record num = assemble(
              sum_char({k.r, k.d}, {1, 2}, tau, ctx, force_K), w);
          eval_record den =
              assemble(sum_char({0, 1}, {1, 2}, tau, ctx, force_K), w);
          return divide_records(num, den);
        } else {
          static_assert(std::is_same_v<T, divisor_sum_kind>);
          int64 np = k.n_prime;
          if (np < 1)
            throw out_of_domain_error("divisor sum index must be >= 1");
          int64 rest = np;
          for (int64 p = 2; p * p <= rest; ++p) {
            if (rest % p) continue;
            if (p % 4 != 1)
              throw out_of_domain_error("divisor sum index has prime factor " +
                                        std::to_string(p) + " != 1 (mod 4)");
            while (rest % p == 0) rest /= p;
          }
          if (rest > 1 && rest % 4 != 1)
            throw out_of_domain_error("divisor sum index has prime factor " +
                                      std::to_string(rest) + " != 1 (mod 4)");
          eval_record den = eval_detailed(big_theta_kind{},
                                          half_scaled(tau, 1), ctx, force_K);
          eval_record out(w);
          out.value.value = complex::of(0, 0, w);
          out.value.err = hpc::err_zero();
          out.scale = hpc::err_zero();
          for (auto [d, sign] : arith::squarefree_divisors(np)) {
            eval_record num = eval_detailed(
                big_theta_kind{}, half_scaled(tau, np / d), ctx, force_K);
            eval_record ratio = divide_records(num, den);
            real coef = hpc::real::of_ratio(sign, d, w);
            out.value.value = out.value.value + coef * ratio.value.value;
            real cerr(hpc::err_prec);
            mpfr_div_si(cerr.raw(), ratio.value.err.raw(), d, MPFR_RNDU);
            out.value.err = hpc::err_add(out.value.err, hpc::err_abs(cerr));
            out.scale = hpc::err_add(out.scale, ratio.scale);
            out.K = std::max(out.K, num.K);
          }
          return out;
        }
      },
      kind);
}

bounded_complex eval(const theta_kind& kind, const complex& tau,
                     const precision_context& ctx) {
  return eval_detailed(kind, tau, ctx).value;
}

bounded_complex eval(const theta_kind& kind, const arith::cm_point& tau,
                     const precision_context& ctx) {
  return eval(kind, tau.to_complex(ctx.work() + 64), ctx);
}

}  // namespace cnl::theta
