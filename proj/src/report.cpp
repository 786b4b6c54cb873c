#include "pod2/report.hpp"

#include <algorithm>

#include "pod2/errors.hpp"

namespace pod2 {

void VerificationReport::record(std::size_t index, const Integer& lhs, const Integer& rhs) {
  status = Status::kFail;
  ++counterexample_total;
  if (counterexamples.size() < kMaxStoredCounterexamples) counterexamples.push_back({index, lhs, rhs});
}

void VerificationReport::reject(const std::string& reason) {
  notes.push_back(reason);
  record(0, 0, 0);
}

std::size_t VerificationReport::first_failure() const {
  if (counterexamples.empty()) return range_checked;
  return std::min_element(counterexamples.begin(), counterexamples.end(),
                          [](const auto& a, const auto& b) { return a.index < b.index; })
      ->index;
}

VerificationReport compare_series(std::string claim, std::string statement,
                                  const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                  const Integer& modulus, std::size_t upto) {
  if (modulus < 0 || modulus == 1) {
    throw DomainError("claim modulus must be 0 (exact) or >= 2, got " + modulus.get_str());
  }
  if (upto > std::min(lhs.order(), rhs.order())) {
    throw StructuralError("claim '" + claim + "' checks " + std::to_string(upto) +
                          " coefficients but only " +
                          std::to_string(std::min(lhs.order(), rhs.order())) + " are known");
  }
  VerificationReport report;
  report.claim = std::move(claim);
  report.statement = std::move(statement);
  report.modulus = modulus;
  report.range_checked = upto;
  Integer diff;
  for (std::size_t n = 0; n < upto; ++n) {
    bool ok;
    if (modulus == 0) {
      ok = lhs[n] == rhs[n];
    } else {
      diff = lhs[n] - rhs[n];
      ok = mpz_divisible_p(diff.get_mpz_t(), modulus.get_mpz_t()) != 0;
    }
    if (!ok) report.record(n, lhs[n], rhs[n]);
  }
  return report;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

std::string status_name(Status s) { return s == Status::kPass ? "pass" : "fail"; }

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json cx = nlohmann::json::array();
  for (const auto& c : report.counterexamples) {
    cx.push_back({{"index", c.index}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}});
  }
  return {
      {"name", report.claim},
      {"statement", report.statement},
      {"modulus", report.modulus.get_str()},
      {"range", report.range_checked},
      {"status", status_name(report.status)},
      {"counterexamples", std::move(cx)},
      {"counterexample_total", report.counterexample_total},
      {"notes", report.notes},
  };
}

}  // namespace pod2
