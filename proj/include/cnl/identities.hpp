// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// Numerical verification of the structural identities behind the
// L-value formula: the classical lemniscatic evaluations, the
// factorization of big-theta CM values into unary theta products, and
// the divisor-sum identity.  Each check returns its residual together
// with the combined error bound it must stay below.

#ifndef CNL_IDENTITIES_HPP
#define CNL_IDENTITIES_HPP

#include <string>
#include <vector>

#include "cnl/arith.hpp"
#include "cnl/hpc.hpp"

namespace cnl::identities {

using arith::int64;

class precondition_violated_error : public error {
 public:
  using error::error;
};

struct residual_item {
  std::string name;
  hpc::real residual;
  hpc::real tolerance;

  bool pass() const { return residual <= tolerance; }
};

// The six classical identities:
//   (i)   theta((1+i)/2)            = sqrt(varpi/pi)
//   (ii)  theta_chi4(i/8)           = sqrt(varpi/pi)
//   (iii) 2 sqrt(L(E_1,1)/pi)       = theta((1+i)/2)
//   (iv)  2^{3/4} sqrt(L(E_2,1)/pi) = theta_chi4(i/8)
//   (v)   theta(i/2)^2              = sqrt2 theta((1+i)/2)^2
//   (vi)  |theta_chi4(i/8)|         = |theta_chi4((1+i)/8)|
// (vi) compares magnitudes: the two CM values differ by the unit phase
// e^{i pi/4}, which the |.|^2 in the L-value formulas never sees.
std::vector<residual_item> verify_gauss(const hpc::precision_context& ctx);

// sqrt(2/(D^2 a1)) sum_{r=0}^{D-1} theta_[ar/D,1/2]((b+i)/(a^2 a1))
//        * conj(theta_[r/D,1/2]((b+i)/a1))  =  big_theta(D (b+i)/(2a))
// Requires b^2 = -1 (mod D a^2 a1) with b even, a = 1 (mod 2D),
// a, a1 = 1 (mod 4), and D free of prime factors 3 mod 4.  Outside
// those hypotheses the equality fails: for odd b the mixed-parity
// cross terms stop cancelling (the D = 1 sum doubles), and for
// a != 1 (mod 2D) each r-term carries the extra unit phase
// e^{-pi i (a-1) r/D} that the plain conjugate pairing drops.  Only
// the stated congruence on b is enforced here; the other hypotheses
// are the caller's contract, so the failure modes stay observable.
residual_item verify_factorization(int64 a, int64 a1, int64 D, int64 b,
                                   const hpc::precision_context& ctx);

// Divisor-sum identity:
//   Theta_{n'}((b+i)/a) = (1/n') sum_{d | rad(n')} mu(d)
//                       + (1/n') sum_{r in (Z/n')^*}
//                           f_{ar,n'}((b+i)/(a^2 a1)) conj(f_{r,n'}((b+i)/a1))
// with the same parity requirement on b (mod n' a^2 a1).
residual_item verify_corthetaf(int64 n_prime, int64 a, int64 a1, int64 b,
                               const hpc::precision_context& ctx);

// big_theta(tau) + odd_theta(tau/4) = big_theta(tau/2).
residual_item verify_lemtheta1(const hpc::complex& tau,
                               const hpc::precision_context& ctx);

// Even b with b^2 = -1 (mod modulus), for generating identity tuples.
// modulus must be odd with all prime factors 1 mod 4.
int64 even_root_for_modulus(int64 modulus);

}  // namespace cnl::identities

#endif  // CNL_IDENTITIES_HPP
