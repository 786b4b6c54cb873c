#include "pod2/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "pod2/errors.hpp"
#include "pod2/hecke.hpp"
#include "pod2/partition.hpp"

namespace pod2 {

namespace {

Integer integer_field(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw StructuralError("expected integer, got " + j.dump());
}

std::size_t positive_size(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw StructuralError(what + " must be a positive integer, got " + j.dump());
  }
  return static_cast<std::size_t>(j.get<long long>());
}

}  // namespace

const std::vector<std::string>& procedure_names() {
  static const std::vector<std::string> names = {
      "pod2-enumeration", "pod2-parity-law",      "pod2-3n+1-parity",          "tau-parity",
      "tau-multiplicativity", "eigenform",        "delta-pod2-link",           "odd-square-gap",
      "odd-square-gap-triangular", "odd-square-gap-lifted", "prime-power-gap", "mod8-family",
  };
  return names;
}

std::vector<ManifestEntry> manifest_from_json(const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() && j.contains("claims") ? j.at("claims") : j;
  if (!list.is_array()) throw StructuralError("manifest must be a JSON array of claims");
  std::vector<ManifestEntry> out;
  std::set<std::string> seen;
  for (const auto& item : list) {
    ManifestEntry e;
    e.name = item.at("name").get<std::string>();
    if (!seen.insert(e.name).second) throw StructuralError("duplicate claim name '" + e.name + "'");
    e.paper_ref = item.value("paper_ref", std::string{});
    e.kind = item.value("kind", std::string(item.contains("verifier") ? "procedure" : "series"));
    if (e.kind == "series") {
      e.lhs = recipe_from_json(item.at("lhs"));
      e.rhs = recipe_from_json(item.at("rhs"));
    } else if (e.kind == "procedure") {
      e.verifier = item.at("verifier").get<std::string>();
      const auto& names = procedure_names();
      if (std::find(names.begin(), names.end(), e.verifier) == names.end()) {
        throw StructuralError("claim '" + e.name + "' names unknown verifier '" + e.verifier + "'");
      }
      if (item.contains("params")) e.params = item.at("params");
    } else {
      throw StructuralError("claim '" + e.name + "' has unknown kind '" + e.kind + "'");
    }
    e.modulus = item.contains("modulus") ? integer_field(item.at("modulus")) : Integer(0);
    if (e.modulus < 0 || e.modulus == 1) throw StructuralError("claim '" + e.name + "' has modulus 1 or negative");
    e.order = positive_size(item.at("order"), "order of '" + e.name + "'");
    if (item.contains("min_order")) e.min_order = positive_size(item.at("min_order"), "min_order");
    const auto expect = item.value("expect", std::string("pass"));
    if (expect != "pass" && expect != "fail") throw StructuralError("expect must be pass or fail");
    e.expect_pass = expect == "pass";
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read manifest '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw StructuralError("manifest '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return manifest_from_json(j);
}

nlohmann::json to_json(const ManifestEntry& e) {
  nlohmann::json j = {{"name", e.name}, {"paper_ref", e.paper_ref}, {"kind", e.kind}};
  if (e.kind == "series") {
    j["lhs"] = to_json(*e.lhs);
    j["rhs"] = to_json(*e.rhs);
  } else {
    j["verifier"] = e.verifier;
    j["params"] = e.params;
  }
  j["modulus"] = e.modulus.get_si();
  j["order"] = e.order;
  if (e.min_order > 1) j["min_order"] = e.min_order;
  j["expect"] = e.expect_pass ? "pass" : "fail";
  return j;
}

bool ClaimResult::as_expected() const {
  if (outcome == Outcome::kError) return false;
  return (outcome == Outcome::kPass) == entry->expect_pass;
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kError: return "error";
  }
  return "error";
}

namespace {

std::uint64_t param_u64(const ManifestEntry& e, const char* key, std::optional<std::uint64_t> override) {
  if (override) return *override;
  if (!e.params.contains(key)) throw StructuralError("claim '" + e.name + "' needs parameter '" + key + "'");
  const auto v = e.params.at(key).get<long long>();
  if (v < 0) throw StructuralError(std::string("parameter '") + key + "' must be >= 0");
  return static_cast<std::uint64_t>(v);
}

unsigned param_k(const ManifestEntry& e, const RunOverrides& o) {
  if (o.k) return *o.k;
  return e.params.contains("k") ? e.params.at("k").get<unsigned>() : 0U;
}

/// Merges sub-reports into one; counterexample indices keep their own meaning.
VerificationReport merge(std::string name, std::string statement, std::size_t range,
                         const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.claim = std::move(name);
  out.statement = std::move(statement);
  out.range_checked = range;
  if (!parts.empty()) out.modulus = parts.front().modulus;
  for (const auto& p : parts) {
    out.notes.push_back(p.claim + ": " + status_name(p.status) + " (" + p.statement + ")");
    for (const auto& c : p.counterexamples) out.record(c.index, c.lhs, c.rhs);
    out.counterexample_total += p.counterexample_total - p.counterexamples.size();
    for (const auto& n : p.notes) out.notes.push_back(p.claim + ": " + n);
  }
  return out;
}

FamilyKind family_kind(const std::string& verifier) {
  if (verifier == "odd-square-gap") return FamilyKind::kOddSquareGap;
  if (verifier == "odd-square-gap-lifted") return FamilyKind::kOddSquareGapLifted;
  if (verifier == "prime-power-gap") return FamilyKind::kPrimePowerGap;
  return FamilyKind::kMod8Family;
}

VerificationReport run_family(const ManifestEntry& e, const RunOverrides& o, std::size_t count) {
  const std::uint64_t p = param_u64(e, "p", o.p);
  const unsigned k = param_k(e, o);
  const FamilyKind kind = family_kind(e.verifier);
  const OffsetSign sign = e.params.value("offset", std::string("-1")) == "+1" ? OffsetSign::kPlusOne
                                                                              : OffsetSign::kMinusOne;
  const unsigned exponent = kind == FamilyKind::kOddSquareGap         ? 1
                            : kind == FamilyKind::kOddSquareGapLifted ? 2 * k + 1
                                                                      : 2 * k + 2;
  std::uint64_t stride = 1;
  for (unsigned i = 0; i < exponent; ++i) stride *= p;
  // Every offset in these families is at most the stride.
  const Pod2Table table = pod2_from_series(required_table_limit(stride, stride, count));

  std::optional<std::uint64_t> single = o.s_or_r;
  for (const char* key : {"s", "r"}) {
    if (!single && e.params.contains(key)) single = e.params.at(key).get<std::uint64_t>();
  }
  if (single) {
    VerificationReport report;
    report.claim = e.name;
    report.statement = e.paper_ref;
    report.modulus = kind == FamilyKind::kMod8Family ? 8 : 2;
    report.range_checked = count;
    try {
      const PrimeFamilyParams params(kind, p, *single, kind == FamilyKind::kOddSquareGap ? 0 : k, sign);
      report.notes.push_back(params.describe() + ": pod2(" + std::to_string(params.stride()) + "n+" +
                             std::to_string(params.offset()) + ")");
      check_progression(params, table, count, report);
    } catch (const DomainError& err) {
      report.reject(std::string("rejected at construction: ") + err.what());
    }
    return report;
  }

  switch (kind) {
    case FamilyKind::kOddSquareGap:
      return verify_theorem3_i(p, count, table);
    case FamilyKind::kOddSquareGapLifted:
      return verify_theorem3_ii(p, k, count, table, delta_series(p + 1));
    case FamilyKind::kPrimePowerGap:
      return verify_theorem3_iii(p, k, count, table, delta_series(p + 1));
    case FamilyKind::kMod8Family:
      return verify_theorem4(p, k, count, table, sign);
  }
  throw DomainError("unreachable family kind");
}

VerificationReport run_procedure(const ManifestEntry& e, const RunOverrides& o, std::size_t order) {
  const std::string& v = e.verifier;
  if (v == "pod2-enumeration") return pod2_enumeration_check(order);
  if (v == "pod2-parity-law") return pod2_parity_law_check(pod2_from_series(order), order);
  if (v == "pod2-3n+1-parity") return identities::theorem2_characterization(order);
  if (v == "tau-parity") return tau_parity_check(delta_series(std::max<std::size_t>(order, 2)), order);
  if (v == "tau-multiplicativity") {
    return tau_multiplicativity_check(delta_series(std::max<std::size_t>(order, 2)), order);
  }
  if (v == "eigenform") {
    const std::uint64_t p = param_u64(e, "p", o.p);
    const std::size_t table_limit = std::max<std::size_t>(order, p + 1);
    TauTable tau = delta_series(table_limit);
    if (e.params.contains("perturb")) {
      std::vector<Integer> values(tau.values().begin(), tau.values().end());
      values.at(e.params.at("perturb").get<std::size_t>()) += 1;
      tau = TauTable(std::move(values));
    }
    return eigenform_check(tau, p, (table_limit - 1) / p + 1);
  }
  if (v == "delta-pod2-link") {
    return merge(e.name, e.paper_ref, order, delta_pod2_mod2_link(order));
  }
  if (v == "odd-square-gap-triangular") {
    return theorem3_i_triangular_avoidance(param_u64(e, "p", o.p), order);
  }
  return run_family(e, o, order);
}

}  // namespace

ClaimResult run_claim(const ManifestEntry& entry, const RunOverrides& overrides) {
  ClaimResult result;
  result.entry = &entry;
  result.order_used = overrides.order ? std::max(*overrides.order, entry.min_order) : entry.order;
  try {
    if (entry.kind == "series") {
      const CongruenceClaim claim{entry.name, entry.paper_ref, *entry.lhs, *entry.rhs, entry.modulus,
                                  result.order_used};
      result.report = verify(claim);
    } else {
      result.report = run_procedure(entry, overrides, result.order_used);
    }
    result.report.claim = entry.name;
    if (!entry.paper_ref.empty()) result.report.statement = entry.paper_ref;
    result.outcome = result.report.passed() ? Outcome::kPass : Outcome::kFail;
  } catch (const std::exception& ex) {
    result.outcome = Outcome::kError;
    result.error = ex.what();
    result.report.claim = entry.name;
    result.report.statement = entry.paper_ref;
  }
  return result;
}

std::vector<ClaimResult> run_manifest(const std::vector<ManifestEntry>& entries, const RunOverrides& overrides) {
  std::vector<ClaimResult> results(entries.size());
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
  // run_claim catches everything, so nothing escapes the parallel region.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) results[i] = run_claim(entries[i], overrides);
  return results;
}

nlohmann::json claim_result_to_json(const ClaimResult& r) {
  nlohmann::json j = to_json(r.report);
  j["paper_ref"] = r.entry->paper_ref;
  j["status"] = outcome_name(r.outcome);
  j["expected"] = r.entry->expect_pass ? "pass" : "fail";
  j["as_expected"] = r.as_expected();
  j["modulus"] = r.entry->modulus.get_str();
  if (r.entry->kind == "procedure") j["modulus"] = r.report.modulus.get_str();
  if (r.outcome == Outcome::kError) j["error"] = r.error;
  j.erase("statement");
  return j;
}

nlohmann::json run_report_json(const std::vector<ClaimResult>& results, double elapsed_ms) {
  nlohmann::json claims = nlohmann::json::array();
  nlohmann::json orders = nlohmann::json::object();
  bool all_ok = true;
  for (const auto& r : results) {
    claims.push_back(claim_result_to_json(r));
    orders[r.entry->name] = r.order_used;
    all_ok = all_ok && r.as_expected();
  }
  return {
      {"claims", std::move(claims)},
      {"meta",
       {{"orders", std::move(orders)},
        {"elapsed_ms", elapsed_ms},
        {"claim_count", results.size()},
        {"all_as_expected", all_ok}}},
  };
}

}  // namespace pod2
