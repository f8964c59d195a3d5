// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// Theta series evaluation with rigorous truncation bounds.
//
// The series handled here, in q-expansion form with q = e^{2 pi i tau}:
//
//   chi(n):        sum_k (k/n) q^{k^2}              (Kronecker-twisted)
//   jacobi:        sum_k q^{k^2}
//   big_theta:     sum_{j,k} q^{j^2+k^2}            (= jacobi^2)
//   odd_theta:     sum_{j,k odd} q^{j^2+k^2}        (= chi(4)-series^2)
//   char_theta:    sum_k e^{pi i (k+mu)^2 tau + 2 pi i nu (k+mu)}
//   f_ratio(r,d):  char_theta(r/d,1/2) / char_theta(0,1/2)
//   divisor_sum:   sum_{d | rad(n')} ((-1)^{omega(d)}/d)
//                      * big_theta((n'/d) tau/2) / big_theta(tau/2)
//
// All sums are truncated at an index K chosen so a geometric majorant
// of the tail is below 2^-(p+g); the reported error bound is that tail
// bound plus a rounding allowance proportional to the positive majorant
// of the summed terms.

#ifndef CNL_THETA_HPP
#define CNL_THETA_HPP

#include <cstdint>
#include <variant>

#include "cnl/arith.hpp"
#include "cnl/hpc.hpp"

namespace cnl::theta {

using arith::int64;

class nonpositive_im_error : public error {
 public:
  using error::error;
};
class out_of_domain_error : public error {
 public:
  using error::error;
};

// Exact rational, used for the characteristics of char_theta.
struct rational {
  int64 num = 0;
  int64 den = 1;  // > 0
};

struct chi_kind {
  int64 n;  // >= 1
};
struct jacobi_kind {};
struct big_theta_kind {};
struct odd_theta_kind {};
struct char_kind {
  rational mu;
  rational nu;
};
struct f_ratio_kind {
  int64 r;  // 0 <= r < d
  int64 d;
};
struct divisor_sum_kind {
  int64 n_prime;  // product of primes = 1 (mod 4), or 1
};

using theta_kind = std::variant<chi_kind, jacobi_kind, big_theta_kind,
                                odd_theta_kind, char_kind, f_ratio_kind,
                                divisor_sum_kind>;

// Truncation index for a series whose terms decay like
// e^{-2 pi * weight_scale * Im(tau) * k^2}: the smallest K with
//   2 e^{-c (K+1)^2} / (1 - e^{-c (2K+3)}) <= 2^-(p+g),  c = 2 pi ws y.
// Returns K and the value of the majorant bound at that K.
struct truncation {
  int64 K = 0;
  hpc::real tail;  // guaranteed >= true tail of the constant-sign majorant
};
truncation truncation_K(const hpc::real& im_tau, double weight_scale,
                        const hpc::precision_context& ctx);

// Streams e^{2 pi i * weight_scale * k^2 * tau} for k = 0, 1, 2, ...
// using q^{(k+1)^2} = q^{k^2} * q^{2k+1} and q^{2k+3} = q^{2k+1} * q^2:
// one exponential at construction, then two multiplications per step.
class q_power_ladder {
 public:
  q_power_ladder(const hpc::complex& tau, double weight_scale,
                 const hpc::precision_context& ctx);

  const hpc::complex& value() const { return qk2_; }  // q^{k^2}
  int64 k() const { return k_; }
  void advance();
  std::size_t mul_count() const { return muls_; }

  // |q|^{k^2}, maintained by the same recurrence on magnitudes.
  const hpc::real& magnitude() const { return mk2_; }

 private:
  hpc::complex qk2_, qodd_, q2_;
  hpc::real mk2_, modd_, m2_;
  int64 k_ = 0;
  std::size_t muls_ = 0;
};

// Evaluation record: the bounded value plus the positive-majorant scale
// S = sum_k |coef_k| |q|^{k^2} and the truncation index actually used.
// S is the natural yardstick for deciding whether a computed value is
// consistent with an exact zero.
struct eval_record {
  hpc::bounded_complex value;
  hpc::real scale;  // >= sum of |summed terms|
  int64 K = 0;

  explicit eval_record(mpfr_prec_t prec)
      : value(prec), scale(hpc::err_zero()) {}
};

// Evaluate the series at tau (Im tau > 0).  The truncation index is
// chosen from ctx; pass force_K >= 0 to override it (used by the
// error-bound honesty tests).
eval_record eval_detailed(const theta_kind& kind, const hpc::complex& tau,
                          const hpc::precision_context& ctx,
                          int64 force_K = -1);

hpc::bounded_complex eval(const theta_kind& kind, const hpc::complex& tau,
                          const hpc::precision_context& ctx);
hpc::bounded_complex eval(const theta_kind& kind, const arith::cm_point& tau,
                          const hpc::precision_context& ctx);

}  // namespace cnl::theta

#endif  // CNL_THETA_HPP
