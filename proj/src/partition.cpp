#include "pod2/partition.hpp"

#include <cmath>
#include <string>

#include "pod2/errors.hpp"

namespace pod2 {

Pod2Table::Pod2Table(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.empty()) throw StructuralError("pod2 table must have limit >= 1");
}

const Integer& Pod2Table::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw RefusalError("pod2 table holds n < " + std::to_string(values_.size()) + "; index " +
                       std::to_string(n) + " needs a table of limit >= " + std::to_string(n + 1));
  }
  return values_[n];
}

EtaQuotientSpec pod2_eta_spec() { return {{{2, 2}, {8, 1}, {1, -1}, {4, -2}}, 0}; }

namespace {

bool is_distinct_odd_part(std::size_t part) { return part % 2 == 1; }
bool is_free_part(std::size_t part) { return part % 8 == 4; }

void add_distinct(std::vector<Integer>& dp, std::size_t part) {
  for (std::size_t n = dp.size(); n-- > part;) dp[n] += dp[n - part];
}

void add_unbounded(std::vector<Integer>& dp, std::size_t part) {
  for (std::size_t n = part; n < dp.size(); ++n) dp[n] += dp[n - part];
}

}  // namespace

Pod2Table pod2_dp(std::size_t limit, PartClassOrder order) {
  if (limit == 0) throw StructuralError("pod2 table limit must be >= 1");
  std::vector<Integer> dp(limit);
  dp[0] = 1;
  auto odd_pass = [&] {
    for (std::size_t part = 1; part < limit; part += 2) add_distinct(dp, part);
  };
  auto free_pass = [&] {
    for (std::size_t part = 4; part < limit; part += 8) add_unbounded(dp, part);
  };
  switch (order) {
    case PartClassOrder::kOddFirst:
      odd_pass();
      free_pass();
      break;
    case PartClassOrder::kResidueFirst:
      free_pass();
      odd_pass();
      break;
    case PartClassOrder::kInterleaved:
      for (std::size_t part = 1; part < limit; ++part) {
        if (is_distinct_odd_part(part)) add_distinct(dp, part);
        else if (is_free_part(part)) add_unbounded(dp, part);
      }
      break;
  }
  return Pod2Table(std::move(dp));
}

Pod2Table pod2_from_series(std::size_t limit) {
  const TruncatedSeries s = expand_eta_quotient(pod2_eta_spec(), limit);
  return Pod2Table(std::vector<Integer>(s.coefficients().begin(), s.coefficients().end()));
}

namespace {

// Parts are listed in nonincreasing order; an odd part may not repeat.
std::uint64_t count_from(std::size_t remaining, std::size_t max_part, bool max_is_used_odd) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t part = std::min(max_part, remaining); part >= 1; --part) {
    if (is_distinct_odd_part(part)) {
      if (part == max_part && max_is_used_odd) continue;
      total += count_from(remaining - part, part, true);
    } else if (is_free_part(part)) {
      total += count_from(remaining - part, part, false);
    }
  }
  return total;
}

}  // namespace

Integer pod2_enumerate(std::size_t n) {
  if (n > kEnumerateMax) {
    throw RefusalError("pod2_enumerate is exponential; refusing n = " + std::to_string(n) +
                       " (bound is " + std::to_string(kEnumerateMax) + ")");
  }
  const std::uint64_t count = count_from(n, n, false);
  return Integer(std::to_string(count));
}

VerificationReport pod2_series_check(std::size_t limit, const EtaQuotientSpec& spec) {
  const TruncatedSeries expanded = expand_eta_quotient(spec, limit);
  const Pod2Table table = pod2_dp(limit);
  return compare_series("pod2-oracle-agreement", "f2^2 f8/(f1 f4^2) = sum pod2(n) q^n (dp oracle)",
                        expanded, table.as_series(), 0, limit);
}

VerificationReport pod2_enumeration_check(std::size_t max_n) {
  const Pod2Table table = pod2_dp(max_n + 1);
  VerificationReport report;
  report.claim = "pod2-enumeration-agreement";
  report.statement = "dp table = exhaustive enumeration";
  report.range_checked = max_n + 1;
  for (std::size_t n = 0; n <= max_n; ++n) {
    const Integer counted = pod2_enumerate(n);
    if (counted != table[n]) report.record(n, table[n], counted);
  }
  return report;
}

bool is_perfect_square(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

bool is_triangular(std::uint64_t n) { return is_perfect_square(8 * n + 1); }

VerificationReport pod2_parity_law_check(const Pod2Table& table, std::size_t limit) {
  if (limit > table.limit()) table.at(limit - 1);
  VerificationReport report;
  report.claim = "pod2-parity-law";
  report.statement = "pod2(m) odd iff 8m+1 is an odd square";
  report.modulus = 2;
  report.range_checked = limit;
  for (std::size_t m = 0; m < limit; ++m) {
    const int parity = mpz_odd_p(table[m].get_mpz_t()) ? 1 : 0;
    const int expected = is_perfect_square(8 * m + 1) ? 1 : 0;
    if (parity != expected) report.record(m, parity, expected);
  }
  return report;
}

}  // namespace pod2
