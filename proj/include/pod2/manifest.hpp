#pragma once

// Claim manifest: the machine-readable catalog of every checked statement.
//
// Entry schema (JSON object):
//   name       unique claim name
//   paper_ref  the statement being checked, as a formula
//   kind       "series" (lhs/rhs recipes) or "procedure" (named verifier)
//   lhs, rhs   recipes, for kind "series"
//   verifier   procedure name, for kind "procedure"
//   params     procedure parameters (p, k, s, r, perturb, offset)
//   modulus    0 for exact equality, else the congruence modulus
//   order      coefficients / terms checked
//   min_order  optional floor applied to order overrides
//   expect     "pass", or "fail" for negative controls

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pod2/identities.hpp"
#include "pod2/report.hpp"

namespace pod2 {

struct ManifestEntry {
  std::string name;
  std::string paper_ref;
  std::string kind;  // "series" | "procedure"
  std::optional<Recipe> lhs;
  std::optional<Recipe> rhs;
  std::string verifier;
  nlohmann::json params = nlohmann::json::object();
  Integer modulus = 0;
  std::size_t order = 1;
  std::size_t min_order = 1;
  bool expect_pass = true;
};

std::vector<ManifestEntry> manifest_from_json(const nlohmann::json& j);
/// Throws IoError when the file cannot be read, StructuralError when malformed.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);
nlohmann::json to_json(const ManifestEntry& e);

/// Names accepted in the "verifier" field.
const std::vector<std::string>& procedure_names();

struct RunOverrides {
  std::optional<std::size_t> order;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> s_or_r;
  std::optional<unsigned> k;
};

enum class Outcome { kPass, kFail, kError };

struct ClaimResult {
  const ManifestEntry* entry = nullptr;
  std::size_t order_used = 0;
  Outcome outcome = Outcome::kError;
  VerificationReport report;
  std::string error;

  /// Passing claims pass; negative controls fail.
  bool as_expected() const;
};

ClaimResult run_claim(const ManifestEntry& entry, const RunOverrides& overrides = {});

/// Runs all entries (in parallel when OpenMP is enabled); results keep manifest order.
std::vector<ClaimResult> run_manifest(const std::vector<ManifestEntry>& entries,
                                      const RunOverrides& overrides = {});

nlohmann::json claim_result_to_json(const ClaimResult& r);
/// {claims: [...], meta: {orders, elapsed_ms, ...}}
nlohmann::json run_report_json(const std::vector<ClaimResult>& results, double elapsed_ms);

std::string outcome_name(Outcome o);

}  // namespace pod2
