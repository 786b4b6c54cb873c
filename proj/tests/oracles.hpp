#pragma once

// Independent reference computations used only by the tests.  Nothing here
// calls into the pentagonal expansion, the convolution kernels or the
// partition DP.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using Coeffs = std::vector<mpz_class>;

/// In place: c *= (1 + sign * q^m), truncated to c.size().
inline void times_binomial(Coeffs& c, std::size_t m, int sign) {
  if (m == 0) {
    for (auto& x : c) x *= (1 + sign);
    return;
  }
  for (std::size_t i = c.size(); i-- > m;) c[i] += sign * c[i - m];
}

/// prod_{n>=1} (1 - q^{jn}) by multiplying every factor out.
inline Coeffs naive_eta(std::size_t j, std::size_t order) {
  Coeffs c(order);
  c[0] = 1;
  for (std::size_t n = 1; j * n < order; ++n) times_binomial(c, j * n, -1);
  return c;
}

/// Schoolbook product, written independently of the library kernels.
inline Coeffs naive_mul(const Coeffs& a, const Coeffs& b) {
  const std::size_t n = std::min(a.size(), b.size());
  Coeffs out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  }
  return out;
}

inline Coeffs naive_pow(const Coeffs& a, unsigned e) {
  Coeffs r(a.size());
  r[0] = 1;
  for (unsigned i = 0; i < e; ++i) r = naive_mul(r, a);
  return r;
}

/// Calls visit(parts) for every partition of n into parts <= max_part (nonincreasing).
inline void for_each_partition(std::size_t n, std::size_t max_part, std::vector<std::size_t>& parts,
                               const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(n - p, p, parts, visit);
    parts.pop_back();
  }
}

/// Number of partitions of n (no restriction).
inline std::uint64_t partition_count(std::size_t n) {
  std::uint64_t count = 0;
  std::vector<std::size_t> parts;
  for_each_partition(n, n, parts, [&](const auto&) { ++count; });
  return count;
}

/// Partitions of n whose odd parts are distinct and whose even parts are all 4 mod 8.
inline std::uint64_t pod2_brute(std::size_t n) {
  std::uint64_t count = 0;
  std::vector<std::size_t> parts;
  for_each_partition(n, n, parts, [&](const std::vector<std::size_t>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (ps[i] % 2 == 0 && ps[i] % 8 != 4) return;
      if (ps[i] % 2 == 1 && i > 0 && ps[i - 1] == ps[i]) return;
    }
    ++count;
  });
  return count;
}

/// Legendre symbol by listing all squares mod p.
inline int legendre_by_squares(long long a, long long p) {
  const long long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long long x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

/// Jacobi triple product (-a;ab)(-b;ab)(ab;ab) with a = sa q^ea, b = sb q^eb.
inline Coeffs triple_product(int sa, std::size_t ea, int sb, std::size_t eb, std::size_t order) {
  Coeffs c(order);
  c[0] = 1;
  const int sab = sa * sb;
  const std::size_t eab = ea + eb;
  // (x; y)_inf = prod_{k>=0} (1 - x y^k) with x = s q^e, y = sab q^eab.
  auto pochhammer = [&](int s, std::size_t e) {
    int sign_y = 1;
    for (std::size_t k = 0; e + k * eab < order; ++k) {
      times_binomial(c, e + k * eab, -s * sign_y);
      sign_y *= sab;
    }
  };
  pochhammer(-sa, ea);
  pochhammer(-sb, eb);
  // (ab; ab) starts at k = 1.
  int sign = sab;
  for (std::size_t k = 1; k * eab < order; ++k) {
    times_binomial(c, k * eab, -sign);
    sign *= sab;
  }
  return c;
}

/// Random series with small coefficients; unit constant term when `unit`.
inline Coeffs random_coeffs(std::mt19937_64& rng, std::size_t order, bool unit) {
  std::uniform_int_distribution<long> dist(-1000, 1000);
  Coeffs c(order);
  for (auto& x : c) x = dist(rng);
  if (unit) c[0] = (rng() & 1U) ? 1 : -1;
  return c;
}

}  // namespace oracle
