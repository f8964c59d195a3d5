// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)
//
// Exact integer and modular arithmetic: input validation and
// factorization, Kronecker symbols, and square roots of -1 to prime
// power and composite moduli.  Everything here is pure integer math;
// no floating point is involved.

#ifndef CNL_ARITH_HPP
#define CNL_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cnl/hpc.hpp"

namespace cnl::arith {

using int64 = std::int64_t;

class not_squarefree_error : public error {
 public:
  using error::error;
};
class bad_prime_factor_error : public error {
 public:
  using error::error;
};
class four_divides_error : public error {
 public:
  using error::error;
};
class no_root_error : public error {
 public:
  using error::error;
};

enum class parity_case { odd, even };

// A point (b + i)/d in the upper half-plane, stored exactly.
struct cm_point {
  int64 b = 0;
  int64 d = 1;  // > 0

  hpc::complex to_complex(mpfr_prec_t prec) const;
};

// A validated curve index n: squarefree, n = 2^e * m with e in {0,1}
// and every prime factor of m congruent to 1 mod 4.
struct curve_input {
  int64 n = 1;
  int64 m = 1;          // odd part
  int e = 0;            // n = 2^e * m
  std::vector<int64> primes;  // distinct primes of m, ascending
  parity_case pcase = parity_case::odd;
  int n_mod_8 = 1;
};

// Factor and classify n.  Throws four_divides_error, not_squarefree_error
// or bad_prime_factor_error when n is outside the admissible family.
curve_input validate_curve(int64 n);

// Kronecker symbol (k/n), defined for every nonzero n (and, by the
// usual convention, (k/0) = [|k| == 1]).  Fully multiplicative in both
// arguments; (k/1) = 1 for all k, including k = 0.
int kronecker(int64 k, int64 n);

// Number of divisors.
int64 sigma0(int64 n);

// Divisors d of rad(n), ascending, each paired with (-1)^omega(d).
std::vector<std::pair<int64, int>> squarefree_divisors(int64 n);

// Square root of a modulo an odd prime p (Tonelli-Shanks).  Returns the
// smaller of the two roots; throws no_root_error when a is not a
// residue.
int64 tonelli_shanks(int64 a, int64 p);

// All b in [0, M) with b^2 = -1 (mod M), ascending.  M must factor as
// 2^e * prod p_i^{k_i} with e <= 1 and every p_i = 1 (mod 4); otherwise
// no root exists and no_root_error is thrown.
std::vector<int64> all_roots_of_minus_one(int64 modulus);

// Smallest of the above.
int64 root_of_minus_one(int64 modulus);

// Smallest b in [0, 2*m^2) of the requested parity with
// b^2 = -1 (mod m^2).  m must be odd with every prime factor
// congruent to 1 mod 4.  The four candidates {±r mod m^2,
// ±r mod m^2 + m^2} contain exactly two of each parity; the smaller
// matching one is returned, which makes the choice deterministic.
int64 sqrt_minus_one(int64 m, parity_case parity);

// (a*b) mod m without overflow.
int64 mulmod(int64 a, int64 b, int64 m);
// (a^e) mod m.
int64 powmod(int64 a, int64 e, int64 m);
// Modular inverse of a mod m (gcd(a, m) = 1).
int64 invmod(int64 a, int64 m);

}  // namespace cnl::arith

#endif  // CNL_ARITH_HPP
