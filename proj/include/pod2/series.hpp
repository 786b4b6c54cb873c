#pragma once

// Exact truncated power series in q over arbitrary-precision integers.
//
// A TruncatedSeries of order N knows the coefficients of q^0 .. q^(N-1);
// everything from q^N on is unknown (not zero).  Binary operations return
// a result whose order is the minimum of the operand orders, so unknown
// coefficients never leak into known ones.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pod2 {

using Integer = mpz_class;

class TruncatedSeries {
 public:
  /// Takes ownership of the coefficient vector; its length is the order.
  /// Throws StructuralError on an empty vector.
  explicit TruncatedSeries(std::vector<Integer> coeffs);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries one(std::size_t order);
  /// c * q^exponent + O(q^order).
  static TruncatedSeries monomial(const Integer& c, std::size_t exponent, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }

  /// Unchecked access; n < order().
  const Integer& operator[](std::size_t n) const noexcept { return coeffs_[n]; }
  /// Checked access; throws StructuralError past the truncation bound.
  const Integer& at(std::size_t n) const;

  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  std::size_t nonzero_count() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Integer> coeffs_;
};

TruncatedSeries make_series(std::vector<Integer> coeffs, std::size_t order);
TruncatedSeries make_series(std::initializer_list<long> coeffs, std::size_t order);

// Ring operations.  Results are truncated to the minimum operand order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, const Integer& c);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries power(const TruncatedSeries& a, unsigned exponent);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Throws DomainError for any other constant term.
TruncatedSeries invert(const TruncatedSeries& a);
/// c / a for a unit series a; order is min(order(c), order(a)).
TruncatedSeries divide(const TruncatedSeries& c, const TruncatedSeries& a);

/// First `order` coefficients; order must not exceed order(a).
TruncatedSeries truncate(const TruncatedSeries& a, std::size_t order);
/// q^k * a.  The order grows by k since the product is exact.
TruncatedSeries shift(const TruncatedSeries& a, std::size_t k);

/// t[n] = s[a*n + b]; order(t) = ceil((order(s) - b) / a).
/// Requires b < a and b < order(s).
TruncatedSeries extract_progression(const TruncatedSeries& s, std::size_t a, std::size_t b);
/// s(q^m) * q^q_shift; order = m*(order(s)-1) + 1 + q_shift.
TruncatedSeries magnify(const TruncatedSeries& s, std::size_t m, std::size_t q_shift = 0);

/// Least nonnegative residues mod M (M >= 2).
TruncatedSeries mod_reduce(const TruncatedSeries& s, const Integer& modulus);
/// True iff a[n] == b[n] (mod M) for all n < upto.
bool series_eq_mod(const TruncatedSeries& a, const TruncatedSeries& b, const Integer& modulus,
                   std::size_t upto);

// ---------------------------------------------------------------------------
// Eta products and quotients.

struct EtaFactor {
  std::int64_t dilation = 1;  // j in f_j
  std::int64_t exponent = 0;

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^q_shift * prod f_j^{e_j}.  Duplicate dilations are allowed; exponents add.
struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;
  std::size_t q_shift = 0;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;
};

/// f_j = prod_{n>=1} (1 - q^{jn}) via the pentagonal number theorem.
TruncatedSeries eta_product(std::int64_t dilation, std::size_t order);

enum class EtaExpansion {
  /// Multiply by / divide by the sparse f_j one power at a time.
  kSparseDivision,
  /// invert(f_j) raised to |e| with dense products.
  kInvertThenPower,
};

TruncatedSeries expand_eta_quotient(const EtaQuotientSpec& spec, std::size_t order,
                                    EtaExpansion method = EtaExpansion::kSparseDivision);

// ---------------------------------------------------------------------------
// Theta functions.

/// psi(q) = f_2^2 / f_1
TruncatedSeries psi_series(std::size_t order);
/// phi(q) = f_2^5 / (f_1^2 f_4^2)
TruncatedSeries phi_series(std::size_t order);
/// psi(-q) = f_1 f_4 / f_2
TruncatedSeries psi_neg(std::size_t order);
/// phi(-q) = f_1^2 / f_2
TruncatedSeries phi_neg(std::size_t order);

/// Ramanujan's f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2} with
/// a = sign_a * q^exp_a and b = sign_b * q^exp_b, summed directly.
/// Requires exp_a, exp_b >= 0, exp_a + exp_b >= 1 and signs in {-1, +1}.
TruncatedSeries theta_f_general(int sign_a, std::int64_t exp_a, int sign_b, std::int64_t exp_b,
                                std::size_t order);

}  // namespace pod2
