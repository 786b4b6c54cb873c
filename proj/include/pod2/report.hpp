#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "pod2/series.hpp"

namespace pod2 {

enum class Status { kPass, kFail };

struct Counterexample {
  std::size_t index = 0;
  Integer lhs;
  Integer rhs;
};

/// Outcome of checking one claim over a finite range.
/// status is kPass iff no counterexample was recorded.
struct VerificationReport {
  std::string claim;
  std::string statement;
  Integer modulus = 0;  // 0: exact equality
  std::size_t range_checked = 0;
  Status status = Status::kPass;
  /// First kMaxStoredCounterexamples mismatches, in index order.
  std::vector<Counterexample> counterexamples;
  std::size_t counterexample_total = 0;
  /// Hypotheses checked along the way, conventions applied, refusals.
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxStoredCounterexamples = 32;

  bool passed() const noexcept { return status == Status::kPass; }
  void record(std::size_t index, const Integer& lhs, const Integer& rhs);
  /// Marks the report failed without a coefficient witness (e.g. rejected parameters).
  /// Stores a placeholder counterexample at index 0 so the pass/fail invariant holds.
  void reject(const std::string& reason);
  /// Smallest mismatching index; only meaningful when !passed().
  std::size_t first_failure() const;
};

/// a[n] == b[n] (modulus 0) or M | a[n] - b[n] on exact values, for n < upto.
VerificationReport compare_series(std::string claim, std::string statement,
                                  const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                  const Integer& modulus, std::size_t upto);

/// Combined verdict of several reports (fails if any fails).
bool all_passed(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const VerificationReport& report);
std::string status_name(Status s);

}  // namespace pod2
