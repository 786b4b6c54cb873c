#pragma once

// Delta(z) = q f_1^24 = sum tau(n) q^n, the prime Hecke operator on
// q-expansions, Legendre symbols, and the arithmetic-progression families
// on which pod2 vanishes mod 2 or mod 8.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pod2/partition.hpp"
#include "pod2/report.hpp"
#include "pod2/series.hpp"

namespace pod2 {

/// values[n] = tau(n) for 1 <= n < limit(); values[0] = 0.
class TauTable {
 public:
  explicit TauTable(std::vector<Integer> values);

  std::size_t limit() const noexcept { return values_.size(); }
  const Integer& operator[](std::size_t n) const noexcept { return values_[n]; }
  /// Throws RefusalError naming the required size when n >= limit().
  const Integer& at(std::size_t n) const;
  std::span<const Integer> values() const noexcept { return values_; }
  TruncatedSeries as_series() const { return TruncatedSeries(values_); }

 private:
  std::vector<Integer> values_;
};

/// Expands q f_1^24 to order `limit` (limit >= 2).
TauTable delta_series(std::size_t limit);

bool is_prime(std::uint64_t n);

/// (s | T_{p,k})[n] = s[pn] + p^{k-1} s[n/p] (second term only when p | n).
/// Result order is (order(s) - 1) / p + 1.  Requires p prime, even k >= 2,
/// order(s) >= p.
TruncatedSeries hecke_Tp(const TruncatedSeries& s, std::uint64_t p, unsigned k = 12);

/// tau(pn) + p^11 tau(n/p) == tau(p) tau(n) for 1 <= n < limit.
VerificationReport eigenform_check(const TauTable& table, std::uint64_t p, std::size_t limit);

/// tau(mn) = tau(m) tau(n) for coprime m, n with mn < limit, and
/// tau(p^l) = tau(p) tau(p^{l-1}) - p^11 tau(p^{l-2}) for p^l < limit, l >= 2.
VerificationReport tau_multiplicativity_check(const TauTable& table, std::size_t limit);

/// tau(n) odd iff n is an odd square, for 1 <= n < limit.
VerificationReport tau_parity_check(const TauTable& table, std::size_t limit);

/// Legendre symbol (a / p) by Euler's criterion.  p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

std::vector<std::uint64_t> theorem3_s_values(std::uint64_t p);
std::vector<std::uint64_t> theorem3_r_values(std::uint64_t p);
std::vector<std::uint64_t> theorem4_r_values(std::uint64_t p);

enum class FamilyKind {
  kOddSquareGap,       // pod2(p n + (s-1)/8) even
  kOddSquareGapLifted,  // pod2(p^{2k+1} n + (s p^{2k} - 1)/8) even
  kPrimePowerGap,      // pod2(p^{2k+2} n + (r p^{2k+1} - 1)/8) even
  kMod8Family,         // pod2(p^{2k+2} n + (r p^{2k+1} - 1)/8) divisible by 8
};

enum class OffsetSign { kMinusOne, kPlusOne };

/// One arithmetic progression pod2(stride * n + offset) with its modulus.
/// Construction validates the family's hypotheses and integrality of the
/// offset, throwing DomainError otherwise.
class PrimeFamilyParams {
 public:
  PrimeFamilyParams(FamilyKind kind, std::uint64_t p, std::uint64_t s_or_r, unsigned k,
                    OffsetSign sign = OffsetSign::kMinusOne);

  FamilyKind kind() const noexcept { return kind_; }
  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t s_or_r() const noexcept { return s_or_r_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t stride() const noexcept { return stride_; }
  std::uint64_t offset() const noexcept { return offset_; }
  unsigned modulus() const noexcept { return kind_ == FamilyKind::kMod8Family ? 8 : 2; }
  std::string describe() const;

 private:
  FamilyKind kind_;
  std::uint64_t p_;
  std::uint64_t s_or_r_;
  unsigned k_;
  std::uint64_t stride_ = 0;
  std::uint64_t offset_ = 0;
};

/// Checks M | pod2(stride * n + offset) for n < count on exact values.
/// Counterexamples are indexed by the pod2 argument.  Throws RefusalError
/// if the table is too small.
void check_progression(const PrimeFamilyParams& params, const Pod2Table& table, std::size_t count,
                       VerificationReport& report);

/// Table size needed to check `count` terms of every progression in the family.
std::size_t required_table_limit(std::uint64_t stride, std::uint64_t max_offset, std::size_t count);

VerificationReport verify_theorem3_i(std::uint64_t p, std::size_t count, const Pod2Table& table);
VerificationReport verify_theorem3_ii(std::uint64_t p, unsigned k, std::size_t count,
                                      const Pod2Table& table, const TauTable& tau);
VerificationReport verify_theorem3_iii(std::uint64_t p, unsigned k, std::size_t count,
                                       const Pod2Table& table, const TauTable& tau);
VerificationReport verify_theorem4(std::uint64_t p, unsigned k, std::size_t count,
                                   const Pod2Table& table, OffsetSign sign = OffsetSign::kMinusOne);

/// Parity-law formulation of the first family: p n + (s-1)/8 is never
/// triangular.  Must agree with verify_theorem3_i.
VerificationReport theorem3_i_triangular_avoidance(std::uint64_t p, std::size_t count);

/// Pairwise mod-2 agreement, to `order`, of
///   sum pod2(n) q^{8n+1},  q f16^2 f64/(f8 f32^2),  Delta,  sum q^{(2n+1)^2}.
std::vector<VerificationReport> delta_pod2_mod2_link(std::size_t order);

}  // namespace pod2
