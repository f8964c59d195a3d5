// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// Central L-values of the curves y^2 = x^3 - n^2 x from CM values of
// Kronecker-twisted theta series, the predicted Tate-Shafarevich order,
// and the effective lower-bound criterion.
//
// For n odd with b the even root of -1 mod n^2:
//
//   L(E_n,1) = pi |theta_chi_n((b+i)/(2n^2))|^2 / (4 sqrt2 n)
//
// and for n = 2m with b the even root of -1 mod m^2:
//
//   L(E_n,1) = pi |theta_chi_m((b+m^2+i)/(2m^2))|^2 / (sqrt2 n).
//
// When the L-value does not vanish the predicted Sha order is
//
//   pi |theta|^2 / (sqrt(2n) * varpi * sigma0(n)^2)        (n odd)
//   sqrt2 pi |theta|^2 / (sqrt(n) * varpi * sigma0(m)^2)   (n = 2m)
//
// which also yields the lower bound |theta| >= (2n)^{1/4} sqrt(varpi/pi)
// sigma0(n) (odd; even case analogous) whenever L != 0 -- the gap that
// makes the zero/nonzero decision well-conditioned.

#ifndef CNL_LVALUE_HPP
#define CNL_LVALUE_HPP

#include <optional>

#include "cnl/arith.hpp"
#include "cnl/hpc.hpp"
#include "cnl/theta.hpp"

namespace cnl::lvalue {

using arith::int64;

class vanishing_lvalue_error : public error {
 public:
  using error::error;
};

enum class vanishing_verdict { zero, nonzero, indeterminate };

struct lvalue_report {
  arith::curve_input input;
  int64 b = 0;              // even root of -1 used
  int64 tau_offset = 0;     // 0 for odd n, m^2 for n = 2m
  arith::cm_point tau;      // (b + tau_offset + i) / (2 m^2)
  hpc::real theta_abs;      // |theta value|
  hpc::real lvalue;
  hpc::real err;            // bound on |lvalue - exact|
  hpc::real theta_err;      // bound on the theta value itself
  vanishing_verdict vanishing = vanishing_verdict::indeterminate;
  bool escalated = false;   // second pass at doubled precision was needed

  // Filled by predicted_sha.
  hpc::real sha_predicted;
  std::optional<int64> sha_rounded;
  bool sha_integral = false;
  bool sha_square = false;

  std::optional<bool> tunnell_consistent;
};

// Evaluate the theta CM value and the L-value, and classify vanishing.
// The verdict policy: zero when theta_abs <= max(16*err, 2^{-p/4} * S)
// with S the positive majorant of the summed series; nonzero when
// theta_abs >= theta_lower_bound/2; otherwise the whole computation is
// redone once at doubled precision before reporting indeterminate.
lvalue_report central_lvalue(const arith::curve_input& input,
                             const hpc::precision_context& ctx);

// Predicted Sha order.  Requires a nonzero verdict; throws
// vanishing_lvalue_error otherwise.  Returns the report with the sha
// fields filled.
lvalue_report predicted_sha(const arith::curve_input& input,
                            const hpc::precision_context& ctx);
// Same, reusing an existing central_lvalue report.
void fill_sha(lvalue_report& report, const hpc::precision_context& ctx);

// The unconditional lower bound on |theta| when L != 0.
hpc::real theta_lower_bound(const arith::curve_input& input,
                            const hpc::precision_context& ctx);

enum class congruence_verdict { congruent_predicted, not_congruent, indeterminate };

// Effective criterion: theta below the lower bound forces L = 0 (so n
// is predicted congruent, under BSD); theta clearly nonzero with the
// counting oracle agreeing means L != 0 (not congruent).  Conflicts
// are reported as indeterminate.
congruence_verdict classify_congruent(const arith::curve_input& input,
                                      const hpc::precision_context& ctx);

// Diagnostic for the alternative even-case formulation via
// theta_chi_{4m} at tau_m / 4: the CM value should match |theta| of the
// primary route, and L / |alt|^2 should equal pi / (sqrt2 n).  Reported
// only; not used as a primary path.
struct even_diagnostic {
  hpc::real alt_theta_abs;
  hpc::real alt_err;
  hpc::real ratio;           // L / alt^2 (NaN when alt ~ 0)
  hpc::real expected_ratio;  // pi / (sqrt2 n)
};
even_diagnostic even_alternative_diagnostic(const arith::curve_input& input,
                                            const hpc::precision_context& ctx);

}  // namespace cnl::lvalue

#endif  // CNL_LVALUE_HPP
