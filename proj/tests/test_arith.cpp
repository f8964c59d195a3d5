// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include <doctest.h>

#include <numeric>
#include <set>

#include "cnl/arith.hpp"

using namespace cnl;
using arith::int64;

TEST_CASE("validate_curve classifies admissible inputs") {
  arith::curve_input one = arith::validate_curve(1);
  CHECK(one.m == 1);
  CHECK(one.e == 0);
  CHECK(one.pcase == arith::parity_case::odd);
  CHECK(one.n_mod_8 == 1);
  CHECK(one.primes.empty());

  arith::curve_input ten = arith::validate_curve(10);
  CHECK(ten.m == 5);
  CHECK(ten.e == 1);
  CHECK(ten.pcase == arith::parity_case::even);
  CHECK(ten.n_mod_8 == 2);
  CHECK(ten.primes == std::vector<int64>{5});

  arith::curve_input big = arith::validate_curve(65);
  CHECK(big.primes == std::vector<int64>{5, 13});
  CHECK(big.n_mod_8 == 1);

  arith::curve_input five = arith::validate_curve(5);
  CHECK(five.n_mod_8 == 5);
}

TEST_CASE("validate_curve rejects inadmissible inputs") {
  CHECK_THROWS_AS(arith::validate_curve(6), arith::bad_prime_factor_error);
  CHECK_THROWS_AS(arith::validate_curve(3), arith::bad_prime_factor_error);
  CHECK_THROWS_AS(arith::validate_curve(12), arith::four_divides_error);
  CHECK_THROWS_AS(arith::validate_curve(25), arith::not_squarefree_error);
  CHECK_THROWS_AS(arith::validate_curve(50), arith::not_squarefree_error);
  CHECK_THROWS_AS(arith::validate_curve(0), error);
}

TEST_CASE("kronecker symbol basics") {
  CHECK(arith::kronecker(2, 5) == -1);
  CHECK(arith::kronecker(3, 13) == 1);
  for (int64 k = -20; k <= 20; ++k) CHECK(arith::kronecker(k, 1) == 1);
  // even moduli: (k/4) is the indicator of odd k
  CHECK(arith::kronecker(3, 4) == 1);
  CHECK(arith::kronecker(5, 4) == 1);
  CHECK(arith::kronecker(2, 4) == 0);
  CHECK(arith::kronecker(-1, 5) == 1);
  CHECK(arith::kronecker(-1, 3) == -1);
  CHECK(arith::kronecker(0, 1) == 1);
  CHECK(arith::kronecker(0, 7) == 0);
}

TEST_CASE("kronecker multiplicativity and zero pattern") {
  for (int64 n = 1; n <= 99; n += 2) {
    for (int64 k = -100; k <= 100; ++k) {
      for (int64 kp : {-7, 3, 10, 51}) {
        CHECK(arith::kronecker(k, n) * arith::kronecker(kp, n) ==
              arith::kronecker(k * kp, n));
      }
      bool coprime = std::gcd(k < 0 ? -k : k, n) == 1;
      CHECK((arith::kronecker(k, n) == 0) == !coprime);
    }
  }
}

TEST_CASE("sqrt_minus_one picks the smallest root of the requested parity") {
  CHECK(arith::sqrt_minus_one(1, arith::parity_case::even) == 0);
  CHECK(arith::sqrt_minus_one(1, arith::parity_case::odd) == 1);
  CHECK(arith::sqrt_minus_one(5, arith::parity_case::even) == 18);
  CHECK(arith::sqrt_minus_one(5, arith::parity_case::odd) == 7);
  CHECK(arith::sqrt_minus_one(13, arith::parity_case::even) == 70);
  CHECK(arith::sqrt_minus_one(13, arith::parity_case::odd) == 99);
  CHECK(arith::sqrt_minus_one(65, arith::parity_case::even) == 268);
  CHECK_THROWS_AS(arith::sqrt_minus_one(3, arith::parity_case::even),
                  arith::no_root_error);
  CHECK_THROWS_AS(arith::sqrt_minus_one(4, arith::parity_case::even),
                  arith::no_root_error);
}

TEST_CASE("sqrt_minus_one roots verify and are minimal") {
  // every valid m assembled from {5, 13, 17, 29, 37, 41}
  std::vector<int64> ms = {1,  5,  13, 17, 29,  37,  41,  65,
                           85, 145, 205, 221, 377, 493, 697};
  for (int64 m : ms) {
    for (auto parity : {arith::parity_case::even, arith::parity_case::odd}) {
      int64 b = arith::sqrt_minus_one(m, parity);
      int64 mm = m * m;
      CHECK(b >= 0);
      CHECK(b < 2 * mm);
      CHECK(b % 2 == (parity == arith::parity_case::odd ? 1 : 0));
      CHECK((arith::mulmod(b % mm, b % mm, mm) + 1) % mm == 0);
      // minimality: no smaller candidate of the same parity
      for (int64 c = b % 2; c < b; c += 2) {
        if ((arith::mulmod(c % mm, c % mm, mm) + 1) % mm == 0) {
          CHECK_MESSAGE(false, "smaller root exists for m=", m);
          break;
        }
      }
    }
  }
}

TEST_CASE("tonelli_shanks roots") {
  CHECK(arith::tonelli_shanks(4, 13) == 2);
  for (int64 p : {5, 13, 17, 29, 97, 101, 65537}) {
    int64 r = arith::tonelli_shanks(p - 1, p);
    CHECK(arith::mulmod(r, r, p) == p - 1);
  }
  CHECK_THROWS_AS(arith::tonelli_shanks(2, 5), arith::no_root_error);
}

TEST_CASE("root_of_minus_one over general moduli") {
  for (int64 M : {1L, 2L, 5L, 25L, 169L, 325L, 4225L, 21125L, 50L}) {
    int64 b = arith::root_of_minus_one(M);
    CHECK(b >= 0);
    CHECK(b < M);
    if (M > 1) CHECK((arith::mulmod(b, b, M) + 1) % M == 0);
  }
  CHECK_THROWS_AS(arith::root_of_minus_one(3), arith::no_root_error);
  CHECK_THROWS_AS(arith::root_of_minus_one(4), arith::no_root_error);
  CHECK_THROWS_AS(arith::root_of_minus_one(21), arith::no_root_error);
}

TEST_CASE("sigma0 counts divisors") {
  CHECK(arith::sigma0(1) == 1);
  CHECK(arith::sigma0(10) == 4);
  CHECK(arith::sigma0(65) == 4);
  CHECK(arith::sigma0(100) == 9);
  CHECK(arith::sigma0(97) == 2);
}

TEST_CASE("squarefree_divisors with signs") {
  auto one = arith::squarefree_divisors(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::pair<int64, int>{1, 1});

  auto five = arith::squarefree_divisors(5);
  REQUIRE(five.size() == 2);
  CHECK(five[0] == std::pair<int64, int>{1, 1});
  CHECK(five[1] == std::pair<int64, int>{5, -1});

  auto sixty_five = arith::squarefree_divisors(65);
  REQUIRE(sixty_five.size() == 4);
  CHECK(sixty_five[1] == std::pair<int64, int>{5, -1});
  CHECK(sixty_five[2] == std::pair<int64, int>{13, -1});
  CHECK(sixty_five[3] == std::pair<int64, int>{65, 1});

  // radical only: repeated factors collapse
  auto fifty = arith::squarefree_divisors(50);
  REQUIRE(fifty.size() == 4);
  CHECK(fifty[3].first == 10);

  for (int64 n = 1; n <= 100; ++n) {
    int sum = 0;
    for (auto [d, s] : arith::squarefree_divisors(n)) sum += s;
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("cm_point converts exactly") {
  arith::cm_point tau{18, 50};
  hpc::complex z = tau.to_complex(128);
  CHECK(z.re.to_double() == doctest::Approx(0.36));
  CHECK(z.im.to_double() == doctest::Approx(0.02));
}
