// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// CM zeros of the twisted theta series: the Atkin-Lehner functional
// equation, vanishing-order computation by discretized Cauchy
// integrals, and range scans combining every per-n check.
//
// For n odd with all prime factors 1 mod 4, b even with b^2+1 = lambda n^2,
// the involution sigma = (2b, -lambda; 4n^2, -2b) fixes
// tau_n = (b+i)/(2n^2) and satisfies
//
//   theta_chi_n(sigma tau) = eps * sqrt(n^2 tau - b/2) * theta_chi_n(tau),
//
// eps = 1-i for n = 1 (mod 8) and i-1 for n = 5 (mod 8), principal
// square root.  At the fixed point this forces theta_chi_n(tau_n) = 0
// for n = 5 (mod 8), and an even vanishing order for n = 1 (mod 8).

#ifndef CNL_ZEROS_HPP
#define CNL_ZEROS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cnl/arith.hpp"
#include "cnl/hpc.hpp"
#include "cnl/lvalue.hpp"
#include "cnl/tunnell.hpp"

namespace cnl::zeros {

using arith::int64;

class order_undetermined_error : public error {
 public:
  using error::error;
};

struct atkin_lehner_data {
  int64 n = 1;
  int64 b = 0;       // even, b^2 + 1 = lambda * n^2
  int64 lambda = 1;
  // matrix (2b, -lambda; 4n^2, -2b), determinant 4

  static atkin_lehner_data for_level(int64 n);
};

// Moebius action of the involution; preserves the upper half-plane.
hpc::complex atkin_lehner_apply(const atkin_lehner_data& data,
                                const hpc::complex& tau);

struct al_residual {
  hpc::real residual;
  hpc::real tolerance;  // combined error bound of the two theta values
};

// |theta(sigma tau) - eps sqrt(n^2 tau - b/2) theta(tau)| together with
// the error budget it must stay under.
al_residual verify_atkin_lehner(const arith::curve_input& input,
                                const hpc::complex& tau,
                                const hpc::precision_context& ctx);

struct zero_order_report {
  int64 n = 1;
  arith::cm_point tau;
  int order = 0;
  std::vector<hpc::real> coeff_mags;  // |c_j r^j| for j = 0..J
  int64 radius_den = 16;              // r = 1 / radius_den
  int samples = 32;
  bool escalated = false;
};

// Vanishing order of theta_chi_n at tau_n: sample on the circle
// tau_n + r e^{2 pi i t/N}, discrete Fourier transform to |c_j r^j|,
// order = first j whose coefficient rises above delta * max.
// Defaults r = 1/(16 n^2), N = 32, J = 4, delta = 2^{-p/4}; escalates
// once to N = 64, r = 1/(32 n^2), then throws order_undetermined_error.
zero_order_report vanishing_order(const arith::curve_input& input,
                                  const hpc::precision_context& ctx);

struct scan_record {
  int64 n = 0;
  bool valid = false;
  std::string skip_reason;  // set when skipped (invalid n)
  std::optional<lvalue::lvalue_report> report;
  std::optional<tunnell::tunnell_counts> counts;
  std::optional<zero_order_report> order;
  bool cross_ok = false;    // theta verdict agrees with the counting oracle
  std::string error;        // per-n failure, scan continues
};

// Full per-n record for every n in [from, to]; invalid n are recorded
// as skipped.  Work is fanned out over `jobs` threads; output is always
// in ascending n order.
std::vector<scan_record> mock_heegner_scan(int64 from, int64 to,
                                           const hpc::precision_context& ctx,
                                           int jobs = 0);

// Same, over an explicit list of n (used for resumed scans).
std::vector<scan_record> scan_ns(const std::vector<int64>& ns,
                                 const hpc::precision_context& ctx,
                                 int jobs = 0);

// Single-n record (the scan's worker, also used by the CLI).
scan_record scan_one(int64 n, const hpc::precision_context& ctx,
                     bool with_order = true);

}  // namespace cnl::zeros

#endif  // CNL_ZEROS_HPP
