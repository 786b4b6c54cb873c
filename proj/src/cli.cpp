#include "pod2/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pod2/errors.hpp"
#include "pod2/hecke.hpp"
#include "pod2/io.hpp"
#include "pod2/manifest.hpp"
#include "pod2/partition.hpp"

#ifndef POD2_DEFAULT_MANIFEST
#define POD2_DEFAULT_MANIFEST "data/claims.json"
#endif

namespace pod2::cli {

namespace {

struct RunConfig {
  std::string command;
  long long limit = 0;
  long long order = 0;
  bool order_given = false;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> s;
  std::optional<std::uint64_t> r;
  std::optional<unsigned> k;
  std::optional<long long> n;
  std::size_t a = 3;
  std::size_t b = 0;
  std::string claim;
  std::string format = "text";
  std::string output_path;
  std::string manifest_path;
  std::string source = "dp";
  bool list = false;
};

/// Writes to the output file when one was given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw IoError("cannot write output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  void finish(const std::string& path) {
    if (file_.is_open()) {
      file_.flush();
      if (!file_) throw IoError("failed writing output file '" + path + "'");
    }
  }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void write_table(const RunConfig& cfg, std::ostream& out, std::span<const Integer> values, std::size_t first,
                 const std::string& label) {
  switch (parse_format(cfg.format)) {
    case OutputFormat::kCsv:
      write_table_csv(out, values, first);
      break;
    case OutputFormat::kJson:
      out << table_to_json(values.subspan(first)).dump() << '\n';
      break;
    case OutputFormat::kText:
      write_table_text(out, values, first, label);
      break;
  }
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.limit < 1) {
    err << "compute: --limit must be >= 1\n";
    return kUsage;
  }
  const auto limit = static_cast<std::size_t>(cfg.limit);
  const Pod2Table table = cfg.source == "series" ? pod2_from_series(limit) : pod2_dp(limit);
  Sink sink(cfg.output_path, out);
  write_table(cfg, sink.stream(), table.values(), 0, "pod2");
  sink.finish(cfg.output_path);
  return kOk;
}

int cmd_tau(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.limit < 2) {
    err << "tau: --limit must be >= 2\n";
    return kUsage;
  }
  const TauTable table = delta_series(static_cast<std::size_t>(cfg.limit));
  Sink sink(cfg.output_path, out);
  write_table(cfg, sink.stream(), table.values(), 1, "tau");
  sink.finish(cfg.output_path);
  return kOk;
}

int cmd_dissect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const long long order = cfg.order_given ? cfg.order : 50;
  if (order < 1 || cfg.a < 1 || cfg.b >= cfg.a) {
    err << "dissect: need --order >= 1 and 0 <= b < a\n";
    return kUsage;
  }
  const auto n = static_cast<std::size_t>(order);
  const TruncatedSeries src = expand_eta_quotient(pod2_eta_spec(), cfg.a * (n - 1) + cfg.b + 1);
  const TruncatedSeries section = extract_progression(src, cfg.a, cfg.b);
  Sink sink(cfg.output_path, out);
  write_table(cfg, sink.stream(), section.coefficients(), 0,
              "pod2(" + std::to_string(cfg.a) + "n+" + std::to_string(cfg.b) + ")");
  sink.finish(cfg.output_path);
  return kOk;
}

void write_results_text(std::ostream& out, const std::vector<ClaimResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.entry->name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "claim" << "  " << std::setw(6) << "status"
      << "  " << std::setw(8) << "expected" << "  " << std::setw(7) << "range" << "  detail\n";
  for (const auto& r : results) {
    out << std::setw(static_cast<int>(width)) << r.entry->name << "  " << std::setw(6) << outcome_name(r.outcome)
        << "  " << std::setw(8) << (r.entry->expect_pass ? "pass" : "fail") << "  " << std::setw(7)
        << r.order_used << "  ";
    if (r.outcome == Outcome::kError) {
      out << r.error;
    } else if (auto rej = std::find_if(r.report.notes.begin(), r.report.notes.end(),
                                       [](const std::string& n) { return n.rfind("rejected", 0) == 0; });
               rej != r.report.notes.end()) {
      out << *rej;
    } else if (!r.report.counterexamples.empty()) {
      const auto& c = r.report.counterexamples.front();
      out << r.report.counterexample_total << " counterexample(s), first at " << c.index << " (" << c.lhs.get_str()
          << " vs " << c.rhs.get_str() << ")";
    } else if (!r.report.notes.empty()) {
      out << r.report.notes.front();
    }
    out << (r.as_expected() ? "" : "  <-- unexpected") << '\n';
  }
  out << std::right;
}

void emit_results(const RunConfig& cfg, std::ostream& out, const std::vector<ClaimResult>& results,
                  double elapsed_ms) {
  Sink sink(cfg.output_path, out);
  if (parse_format(cfg.format) == OutputFormat::kJson) {
    sink.stream() << run_report_json(results, elapsed_ms).dump(2) << '\n';
  } else {
    write_results_text(sink.stream(), results);
  }
  sink.finish(cfg.output_path);
}

RunOverrides overrides_from(const RunConfig& cfg) {
  RunOverrides o;
  if (cfg.order_given) o.order = static_cast<std::size_t>(cfg.order);
  if (cfg.n) o.order = static_cast<std::size_t>(*cfg.n);
  o.p = cfg.p;
  o.s_or_r = cfg.s ? cfg.s : cfg.r;
  o.k = cfg.k;
  return o;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto entries = load_manifest(cfg.manifest_path);
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == cfg.claim; });
  if (cfg.list || it == entries.end()) {
    if (!cfg.list) err << "verify: unknown claim '" << cfg.claim << "'. Available claims:\n";
    std::ostream& dest = cfg.list ? out : err;
    for (const auto& e : entries) dest << "  " << e.name << (e.expect_pass ? "" : "  (negative control)") << '\n';
    return cfg.list ? kOk : kUsage;
  }
  if ((cfg.order_given && cfg.order < 1) || (cfg.n && *cfg.n < 1)) {
    err << "verify: --order/--n must be >= 1\n";
    return kUsage;
  }
  if (cfg.p && !is_prime(*cfg.p)) {
    err << "verify: --p " << *cfg.p << " is not prime\n";
    return kUsage;
  }
  const auto start = std::chrono::steady_clock::now();
  const ClaimResult result = run_claim(*it, overrides_from(cfg));
  emit_results(cfg, out, {result}, elapsed_since(start));
  if (result.outcome == Outcome::kError) {
    err << "verify: " << result.error << '\n';
    return kUsage;
  }
  return result.outcome == Outcome::kPass ? kOk : kClaimFailed;
}

int cmd_report_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto entries = load_manifest(cfg.manifest_path);
  if (cfg.order_given && cfg.order < 1) {
    err << "report-all: --order must be >= 1\n";
    return kUsage;
  }
  RunOverrides o;
  if (cfg.order_given) o.order = static_cast<std::size_t>(cfg.order);
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_manifest(entries, o);
  emit_results(cfg, out, results, elapsed_since(start));
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.as_expected(); });
  for (const auto& r : results) {
    if (!r.as_expected()) {
      err << "report-all: claim '" << r.entry->name << "' was " << outcome_name(r.outcome) << ", expected "
          << (r.entry->expect_pass ? "pass" : "fail") << (r.error.empty() ? "" : ": " + r.error) << '\n';
    }
  }
  return ok ? kOk : kClaimFailed;
}

}  // namespace

std::string default_manifest_path() {
  if (const char* env = std::getenv("POD2_MANIFEST"); env != nullptr && *env != '\0') return env;
  return POD2_DEFAULT_MANIFEST;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"pod2: exact q-series checks for partitions with distinct odd parts"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--output,-o", cfg.output_path, "Write to this file instead of stdout");
  };
  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("--manifest", cfg.manifest_path, "Claim manifest (default: $POD2_MANIFEST or bundled)");
  };

  auto* compute = app.add_subcommand("compute", "Write the pod2(n) table for n < limit");
  compute->add_option("--limit", cfg.limit, "Exclusive bound on n")->required();
  compute->add_option("--source", cfg.source, "dp (partition count) or series (eta quotient)")
      ->check(CLI::IsMember({"dp", "series"}));
  add_output(compute);

  auto* tau = app.add_subcommand("tau", "Write tau(n) for 1 <= n < limit");
  tau->add_option("--limit", cfg.limit, "Exclusive bound on n")->required();
  add_output(tau);

  auto* dissect = app.add_subcommand("dissect", "Write pod2(a n + b) for n < order");
  dissect->add_option("--order", cfg.order, "Number of terms")->each([&](const std::string&) { cfg.order_given = true; });
  dissect->add_option("--a", cfg.a, "Progression modulus");
  dissect->add_option("--b", cfg.b, "Progression residue");
  add_output(dissect);

  auto* verify = app.add_subcommand("verify", "Run one claim from the manifest");
  verify->add_option("--claim", cfg.claim, "Claim name");
  verify->add_flag("--list", cfg.list, "List claim names");
  verify->add_option("--order", cfg.order, "Coefficients or terms to check")
      ->each([&](const std::string&) { cfg.order_given = true; });
  verify->add_option("--n", cfg.n, "Terms per progression (families)");
  verify->add_option("--p", cfg.p, "Prime");
  verify->add_option("--s", cfg.s, "Single s value (odd-square families)");
  verify->add_option("--r", cfg.r, "Single r value (prime-power and mod 8 families)");
  verify->add_option("--k", cfg.k, "Exponent k");
  add_output(verify);
  add_manifest(verify);

  auto* report_all = app.add_subcommand("report-all", "Run every claim in the manifest");
  report_all->add_option("--order", cfg.order, "Override every claim's order")
      ->each([&](const std::string&) { cfg.order_given = true; });
  add_output(report_all);
  add_manifest(report_all);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return kUsage;
  }

  if (cfg.manifest_path.empty()) cfg.manifest_path = default_manifest_path();
  try {
    if (compute->parsed()) return cmd_compute(cfg, out, err);
    if (tau->parsed()) return cmd_tau(cfg, out, err);
    if (dissect->parsed()) return cmd_dissect(cfg, out, err);
    if (verify->parsed()) {
      if (cfg.claim.empty() && !cfg.list) {
        err << "verify: --claim is required\n";
        return kUsage;
      }
      return cmd_verify(cfg, out, err);
    }
    if (report_all->parsed()) return cmd_report_all(cfg, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pod2::cli
