#pragma once

// pod2(n): partitions of n into distinct odd parts together with any
// number of parts congruent to 4 mod 8.  Its generating function is
// psi(-q^2)/psi(-q) = f_2^2 f_8 / (f_1 f_4^2) = (-q;q^2)_inf / (q^4;q^8)_inf.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pod2/report.hpp"
#include "pod2/series.hpp"

namespace pod2 {

/// values[n] = pod2(n) for n < limit().
class Pod2Table {
 public:
  explicit Pod2Table(std::vector<Integer> values);

  std::size_t limit() const noexcept { return values_.size(); }
  const Integer& operator[](std::size_t n) const noexcept { return values_[n]; }
  /// Throws RefusalError naming the required size when n >= limit().
  const Integer& at(std::size_t n) const;
  std::span<const Integer> values() const noexcept { return values_; }
  TruncatedSeries as_series() const { return TruncatedSeries(values_); }

 private:
  std::vector<Integer> values_;
};

/// The eta quotient f_2^2 f_8 / (f_1 f_4^2).
EtaQuotientSpec pod2_eta_spec();

enum class PartClassOrder {
  kOddFirst,      // odd 0/1 items, then 4 mod 8 items
  kResidueFirst,  // 4 mod 8 items, then odd items
  kInterleaved,   // every allowed part in increasing size
};

/// Knapsack-style count over the two part classes.
Pod2Table pod2_dp(std::size_t limit, PartClassOrder order = PartClassOrder::kOddFirst);

/// Table read off the eta-quotient expansion.
Pod2Table pod2_from_series(std::size_t limit);

/// Explicit recursive enumeration; refuses n > kEnumerateMax.
Integer pod2_enumerate(std::size_t n);
inline constexpr std::size_t kEnumerateMax = 80;

/// Expands `spec` (default: the pod2 quotient) and compares it with pod2_dp.
VerificationReport pod2_series_check(std::size_t limit, const EtaQuotientSpec& spec = pod2_eta_spec());

/// pod2_dp vs pod2_enumerate for every n <= max_n.
VerificationReport pod2_enumeration_check(std::size_t max_n);

/// pod2(m) odd iff 8m+1 is a perfect square, for m < limit.
VerificationReport pod2_parity_law_check(const Pod2Table& table, std::size_t limit);

bool is_perfect_square(std::uint64_t n);
bool is_triangular(std::uint64_t n);

}  // namespace pod2
