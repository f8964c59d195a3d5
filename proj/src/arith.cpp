// Copyright (c) 2026 The cnl developers.
// Distributed under the Boost Software License, Version 1.0.
// (See https://www.boost.org/LICENSE_1_0.txt)

#include "cnl/arith.hpp"

#include <algorithm>
#include <string>

namespace cnl::arith {

namespace {

using int128 = __int128;

}  // namespace

hpc::complex cm_point::to_complex(mpfr_prec_t prec) const {
  hpc::real re(prec), im(prec);
  mpfr_set_si(re.raw(), b, MPFR_RNDN);
  mpfr_div_si(re.raw(), re.raw(), d, MPFR_RNDN);
  mpfr_set_si(im.raw(), 1, MPFR_RNDN);
  mpfr_div_si(im.raw(), im.raw(), d, MPFR_RNDN);
  return hpc::complex(std::move(re), std::move(im));
}

int64 mulmod(int64 a, int64 b, int64 m) {
  return static_cast<int64>(static_cast<int128>(a) * b % m);
}

int64 powmod(int64 a, int64 e, int64 m) {
  a %= m;
  if (a < 0) a += m;
  int64 r = 1 % m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

int64 invmod(int64 a, int64 m) {
  int64 t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    int64 q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw no_root_error("invmod: arguments are not coprime");
  return t < 0 ? t + m : t;
}

curve_input validate_curve(int64 n) {
  if (n < 1) throw error("curve index must be positive");
  if (n % 4 == 0)
    throw four_divides_error("4 divides " + std::to_string(n) +
                             ": index must be squarefree");
  curve_input ci;
  ci.n = n;
  ci.e = (n % 2 == 0) ? 1 : 0;
  ci.m = n >> ci.e;
  ci.pcase = ci.e ? parity_case::even : parity_case::odd;
  ci.n_mod_8 = static_cast<int>(n % 8);

  int64 rest = ci.m;
  for (int64 p = 3; p * p <= rest; p += 2) {
    if (rest % p) continue;
    rest /= p;
    if (rest % p == 0)
      throw not_squarefree_error(std::to_string(p) + "^2 divides " +
                                 std::to_string(n));
    if (p % 4 == 3)
      throw bad_prime_factor_error("prime " + std::to_string(p) +
                                   " = 3 (mod 4) divides " + std::to_string(n));
    ci.primes.push_back(p);
  }
  if (rest > 1) {
    if (rest % 4 == 3)
      throw bad_prime_factor_error("prime " + std::to_string(rest) +
                                   " = 3 (mod 4) divides " + std::to_string(n));
    ci.primes.push_back(rest);
  }
  return ci;
}

int kronecker(int64 k, int64 n) {
  if (n == 0) return (k == 1 || k == -1) ? 1 : 0;
  int s = 1;
  if (n < 0) {
    n = -n;
    if (k < 0) s = -s;
  }
  int e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  if (e > 0) {
    if (k % 2 == 0) return 0;
    int64 k8 = k % 8;
    if (k8 < 0) k8 += 8;
    if (e % 2 == 1 && (k8 == 3 || k8 == 5)) s = -s;
  }
  // Jacobi (k/n) for odd n > 0 by the binary reciprocity loop.
  int64 a = k % n;
  if (a < 0) a += n;
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      int64 n8 = n % 8;
      if (n8 == 3 || n8 == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  if (n != 1) return 0;
  return s * t;
}

int64 sigma0(int64 n) {
  int64 count = 1;
  for (int64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int64 e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

std::vector<std::pair<int64, int>> squarefree_divisors(int64 n) {
  std::vector<int64> primes;
  for (int64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);

  std::vector<std::pair<int64, int>> divs{{1, 1}};
  for (int64 p : primes) {
    std::size_t sz = divs.size();
    for (std::size_t i = 0; i < sz; ++i)
      divs.emplace_back(divs[i].first * p, -divs[i].second);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int64 tonelli_shanks(int64 a, int64 p) {
  a %= p;
  if (a < 0) a += p;
  if (p == 2) return a;
  if (a == 0) return 0;
  if (kronecker(a, p) != 1)
    throw no_root_error(std::to_string(a) + " is not a square mod " +
                        std::to_string(p));
  // p - 1 = q * 2^s with q odd.
  int64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  if (s == 1) return std::min(powmod(a, (p + 1) / 4, p),
                              p - powmod(a, (p + 1) / 4, p));
  int64 z = 2;
  while (kronecker(z, p) != -1) ++z;
  int64 c = powmod(z, q, p);
  int64 x = powmod(a, (q + 1) / 2, p);
  int64 t = powmod(a, q, p);
  int m = s;
  while (t != 1) {
    int64 tt = t;
    int i = 0;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
      if (i == m) throw no_root_error("tonelli_shanks: not a residue");
    }
    int64 bpow = c;
    for (int j = 0; j < m - i - 1; ++j) bpow = mulmod(bpow, bpow, p);
    x = mulmod(x, bpow, p);
    c = mulmod(bpow, bpow, p);
    t = mulmod(t, c, p);
    m = i;
  }
  return std::min(x, p - x);
}

std::vector<int64> all_roots_of_minus_one(int64 modulus) {
  if (modulus < 1) throw no_root_error("modulus must be positive");
  if (modulus == 1) return {0};
  // Per prime power, the two roots ±r; every sign choice combines by CRT.
  int64 rest = modulus;
  std::vector<std::pair<int64, std::vector<int64>>> locals;
  if (rest % 2 == 0) {
    rest /= 2;
    if (rest % 2 == 0) throw no_root_error("-1 is not a square mod 4");
    locals.push_back({2, {1}});
  }
  auto lift = [](int64 p, int64 k) {
    int64 r = tonelli_shanks(p - 1, p);
    int64 mod = p;
    for (int64 j = 1; j < k; ++j) {
      int64 next = mod * p;
      int64 val = (mulmod(r, r, next) + 1) % next;
      int64 inv2r = invmod(2 * r % next, next);
      r = (r - mulmod(val, inv2r, next)) % next;
      if (r < 0) r += next;
      mod = next;
    }
    return r;
  };
  auto add_prime = [&](int64 p, int64 k, int64 pk) {
    if (p % 4 != 1)
      throw no_root_error("-1 is not a square mod " + std::to_string(p));
    int64 r = lift(p, k);
    locals.push_back({pk, {r, pk - r}});
  };
  for (int64 p = 3; p * p <= rest; p += 2) {
    if (rest % p) continue;
    int64 pk = 1, k = 0;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
      ++k;
    }
    add_prime(p, k, pk);
  }
  if (rest > 1) add_prime(rest, 1, rest);

  std::vector<int64> roots{0};
  int64 partial_mod = 1;
  for (const auto& [md, opts] : locals) {
    std::vector<int64> next;
    int64 inv = invmod(partial_mod % md, md);
    for (int64 base : roots) {
      for (int64 r : opts) {
        int64 diff = (r - base) % md;
        if (diff < 0) diff += md;
        next.push_back(base + partial_mod * mulmod(diff, inv, md));
      }
    }
    roots = std::move(next);
    partial_mod *= md;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int64 root_of_minus_one(int64 modulus) {
  return all_roots_of_minus_one(modulus).front();
}

int64 sqrt_minus_one(int64 m, parity_case parity) {
  if (m < 1 || m % 2 == 0)
    throw no_root_error("modulus base must be odd and positive");
  int64 mm = m * m;
  int want = parity == parity_case::even ? 0 : 1;
  // m^2 is odd, so each residue class r contributes one representative
  // of each parity among {r, r + m^2}; the smallest match over all
  // root classes keeps the choice deterministic.
  int64 best = -1;
  for (int64 r : all_roots_of_minus_one(mm)) {
    for (int64 c : {r, r + mm}) {
      if (c % 2 == want && (best < 0 || c < best)) best = c;
    }
  }
  if (best < 0)
    throw no_root_error("no root of the requested parity mod " +
                        std::to_string(mm));
  return best;
}

}  // namespace cnl::arith
