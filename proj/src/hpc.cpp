// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/hpc.hpp"

#include <cstdio>
#include <cstdlib>

namespace cnl::hpc {

std::string real::str(int digits) const {
  if (digits < 2) digits = 2;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

complex operator+(const complex& a, const complex& b) {
  return complex(a.re + b.re, a.im + b.im);
}
complex operator-(const complex& a, const complex& b) {
  return complex(a.re - b.re, a.im - b.im);
}
complex operator-(const complex& a) { return complex(-a.re, -a.im); }

complex operator*(const complex& a, const complex& b) {
  mpfr_prec_t p = join_prec(a.re, b.re);
  real t(p), u(p), re(p), im(p);
  mpfr_mul(t.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_mul(u.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_sub(re.raw(), t.raw(), u.raw(), MPFR_RNDN);
  mpfr_mul(t.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
  mpfr_mul(u.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_add(im.raw(), t.raw(), u.raw(), MPFR_RNDN);
  return complex(std::move(re), std::move(im));
}

complex operator*(const real& a, const complex& b) {
  return complex(a * b.re, a * b.im);
}

complex operator/(const complex& a, const complex& b) {
  mpfr_prec_t p = join_prec(a.re, b.re);
  real den(p);
  mpfr_mul(den.raw(), b.re.raw(), b.re.raw(), MPFR_RNDN);
  mpfr_fma(den.raw(), b.im.raw(), b.im.raw(), den.raw(), MPFR_RNDN);
  complex num = a * conj(b);
  return complex(num.re / den, num.im / den);
}

complex conj(const complex& a) { return complex(a.re, -a.im); }

real abs(const complex& a) {
  real r(a.prec());
  mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
  return r;
}

complex sqrt(const complex& a) {
  mpfr_prec_t p = a.prec();
  real h = abs(a);
  if (mpfr_sgn(a.re.raw()) >= 0) {
    // u = sqrt((|z| + re)/2), v = im / (2u); u = sqrt(|z|) at z = 0.
    real u(p);
    mpfr_add(u.raw(), h.raw(), a.re.raw(), MPFR_RNDN);
    mpfr_div_2si(u.raw(), u.raw(), 1, MPFR_RNDN);
    mpfr_sqrt(u.raw(), u.raw(), MPFR_RNDN);
    if (mpfr_zero_p(u.raw())) return complex(u, real::of(0L, p));
    real v(p);
    mpfr_div(v.raw(), a.im.raw(), u.raw(), MPFR_RNDN);
    mpfr_div_2si(v.raw(), v.raw(), 1, MPFR_RNDN);
    return complex(std::move(u), std::move(v));
  }
  // re < 0: |v| = sqrt((|z| - re)/2) with the sign of im (im = 0 maps
  // to the positive imaginary axis), u = im / (2v).
  real v(p);
  mpfr_sub(v.raw(), h.raw(), a.re.raw(), MPFR_RNDN);
  mpfr_div_2si(v.raw(), v.raw(), 1, MPFR_RNDN);
  mpfr_sqrt(v.raw(), v.raw(), MPFR_RNDN);
  if (mpfr_sgn(a.im.raw()) < 0) mpfr_neg(v.raw(), v.raw(), MPFR_RNDN);
  real u(p);
  mpfr_div(u.raw(), a.im.raw(), v.raw(), MPFR_RNDN);
  mpfr_div_2si(u.raw(), u.raw(), 1, MPFR_RNDN);
  return complex(std::move(u), std::move(v));
}

complex unit_phase(const real& theta) {
  mpfr_prec_t p = theta.prec();
  real c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return complex(std::move(c), std::move(s));
}

complex exp(const complex& z) {
  real mag = exp(z.re);
  return mag * unit_phase(z.im);
}

bounded_complex agm(const real& a0, const real& b0,
                    const precision_context& ctx) {
  if (a0.sign() <= 0 || b0.sign() <= 0)
    throw nonpositive_input_error("agm requires positive operands");
  mpfr_prec_t w = ctx.work();
  real a = a0.at(w), b = b0.at(w);
  if (b > a) std::swap(a, b);

  real gap = a - b;
  real stop = ldexp2(a, ctx.tail_exp2());
  int iters = 0;
  while (gap > stop && iters < 64) {
    real mid(w);
    mpfr_add(mid.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_div_2si(mid.raw(), mid.raw(), 1, MPFR_RNDN);
    real geo(w);
    mpfr_mul(geo.raw(), a.raw(), b.raw(), MPFR_RNDN);
    mpfr_sqrt(geo.raw(), geo.raw(), MPFR_RNDN);
    a = std::move(mid);
    b = std::move(geo);
    if (b > a) std::swap(a, b);
    gap = a - b;
    stop = ldexp2(a, ctx.tail_exp2());
    ++iters;
  }

  // The limit lies in [b, a], so the midpoint misses it by at most
  // gap/2; add a few ulps for the iteration's own rounding.
  real mid(w);
  mpfr_add(mid.raw(), a.raw(), b.raw(), MPFR_RNDN);
  mpfr_div_2si(mid.raw(), mid.raw(), 1, MPFR_RNDN);
  real err = err_add(err_abs(gap),
                     err_mul(err_abs(mid), err_pow2(-w + 4 + iters)));
  return bounded_complex(complex(std::move(mid), real::of(0L, w)),
                         std::move(err));
}

bounded_complex lemniscate(const precision_context& ctx) {
  mpfr_prec_t w = ctx.work();
  real sqrt2 = sqrt(real::of(2L, w));
  bounded_complex m = agm(real::of(1L, w), sqrt2, ctx);
  real value = pi(w) / m.value.re;
  // varpi = pi/M: relative error of M carries over, plus division
  // rounding.
  real rel = err_div(m.err, err_abs(m.value.re));
  real err = err_add(err_mul(err_abs(value), rel),
                     err_mul(err_abs(value), err_pow2(-w + 3)));
  return bounded_complex(complex(std::move(value), real::of(0L, w)),
                         std::move(err));
}

}  // namespace cnl::hpc
