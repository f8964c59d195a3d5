// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// High-precision real and complex arithmetic on top of MPFR, plus the
// handful of constants the rest of the library needs (pi, the
// arithmetic-geometric mean, the lemniscate constant).
//
// Every computed quantity that leaves this layer is a bounded value: a
// number together with a conservative absolute error bound.  The bound
// is a single scalar per result (truncation plus a fixed rounding
// allowance), not an interval; it is kept on a low-precision mpfr value
// rounded upward so the accounting itself can only overestimate.

#ifndef CNL_HPC_HPP
#define CNL_HPC_HPP

#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace cnl {

// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class nonpositive_input_error : public error {
 public:
  using error::error;
};

namespace hpc {

// Precision of error-bound bookkeeping values.  Bounds only need a
// correct order of magnitude; 32 bits is plenty and keeps them cheap.
inline constexpr mpfr_prec_t err_prec = 32;

// Working precision policy: series are truncated so the tail is below
// 2^-(bits+guard), and arithmetic runs at bits + 2*guard so rounding
// noise stays far below the truncation budget.
class precision_context {
 public:
  explicit precision_context(long bits, long guard = 32)
      : bits_(bits), guard_(guard) {
    if (bits < 64) throw std::invalid_argument("precision must be >= 64 bits");
    if (guard < 8) throw std::invalid_argument("guard must be >= 8 bits");
  }

  long bits() const { return bits_; }
  long guard() const { return guard_; }
  long work() const { return bits_ + 2 * guard_; }
  // log2 of the per-series truncation target 2^-(p+g).
  long tail_exp2() const { return -(bits_ + guard_); }

  precision_context doubled() const { return precision_context(2 * bits_, guard_); }

 private:
  long bits_;
  long guard_;
};

// Value type wrapping mpfr_t.  Precision is fixed at construction; all
// binary operators produce results at the wider operand precision and
// round to nearest.
class real {
 public:
  real() { mpfr_init2(v_, 64); }
  explicit real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  real(const real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  real(real&& o) noexcept {
    mpfr_init2(v_, 64);
    mpfr_swap(v_, o.v_);
  }
  real& operator=(const real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  real& operator=(real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~real() { mpfr_clear(v_); }

  static real of(long x, mpfr_prec_t prec) {
    real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static real of(double x, mpfr_prec_t prec) {
    real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static real of_ratio(long num, long den, mpfr_prec_t prec) {
    real r(prec);
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
  }
  // 2^e, exact.
  static real pow2(long e, mpfr_prec_t prec) {
    real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  real at(mpfr_prec_t prec) const {
    real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Decimal string with the given number of significant digits.
  std::string str(int digits) const;

  friend bool operator<(const real& a, const real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const real& a, const real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const real& a, const real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const real& a, const real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const real& a, const real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t join_prec(const real& a, const real& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

inline real operator+(const real& a, const real& b) {
  real r(join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline real operator-(const real& a, const real& b) {
  real r(join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline real operator*(const real& a, const real& b) {
  real r(join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline real operator/(const real& a, const real& b) {
  real r(join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}
inline real operator-(const real& a) {
  real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline real sqrt(const real& a) {
  real r(a.prec());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline real abs(const real& a) {
  real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
inline real exp(const real& a) {
  real r(a.prec());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}
// a * 2^e, exact.
inline real ldexp2(const real& a, long e) {
  real r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}
inline real pi(mpfr_prec_t prec) {
  real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
// k-th root, k >= 1.
inline real root(const real& a, unsigned long k) {
  real r(a.prec());
  mpfr_rootn_ui(r.raw(), a.raw(), k, MPFR_RNDN);
  return r;
}

// Error-bound helpers: low precision, rounded up so bounds never shrink
// by accident.
inline real err_zero() {
  real r(err_prec);
  mpfr_set_zero(r.raw(), 1);
  return r;
}
inline real err_add(const real& a, const real& b) {
  real r(err_prec);
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
inline real err_mul(const real& a, const real& b) {
  real r(err_prec);
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}
inline real err_div(const real& a, const real& b) {
  real r(err_prec);
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
  return r;
}
inline real err_scale(const real& a, long k) {
  real r(err_prec);
  mpfr_mul_si(r.raw(), a.raw(), k, MPFR_RNDU);
  return r;
}
inline real err_up(const real& a) {
  real r(err_prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}
// |a| rounded up to err precision.
inline real err_abs(const real& a) {
  real r(err_prec);
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDU);
  return r;
}
// 2^e at err precision.
inline real err_pow2(long e) { return real::pow2(e, err_prec); }

// Complex value as a real/imaginary pair at a common precision.
struct complex {
  real re, im;

  complex() = default;
  explicit complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  complex(real r, real i) : re(std::move(r)), im(std::move(i)) {}

  static complex of(long r, long i, mpfr_prec_t prec) {
    return complex(real::of(r, prec), real::of(i, prec));
  }
  mpfr_prec_t prec() const { return re.prec(); }
};

complex operator+(const complex& a, const complex& b);
complex operator-(const complex& a, const complex& b);
complex operator*(const complex& a, const complex& b);
complex operator/(const complex& a, const complex& b);
complex operator*(const real& a, const complex& b);
complex conj(const complex& a);
complex operator-(const complex& a);
real abs(const complex& a);
// Principal square root (branch cut along the negative real axis,
// argument in (-pi/2, pi/2]).
complex sqrt(const complex& a);
// e^{i*theta} for real theta.
complex unit_phase(const real& theta);
// e^{z}.
complex exp(const complex& z);

// A complex value together with an absolute error bound: whenever the
// inputs were exact, |value - exact| <= err.
struct bounded_complex {
  complex value;
  real err;

  explicit bounded_complex(mpfr_prec_t prec) : value(prec), err(err_zero()) {}
  bounded_complex(complex v, real e) : value(std::move(v)), err(std::move(e)) {}

  real abs_value() const { return hpc::abs(value); }
};

// Arithmetic-geometric mean of a and b.  Iterates until
// |a_k - b_k| <= 2^-(p+g) * a_k; the limit is bracketed by the final
// pair, so the gap itself is the dominant error term.
bounded_complex agm(const real& a, const real& b, const precision_context& ctx);

// The lemniscate constant, computed as pi / agm(1, sqrt 2).
bounded_complex lemniscate(const precision_context& ctx);

}  // namespace hpc
}  // namespace cnl

#endif  // CNL_HPC_HPP
