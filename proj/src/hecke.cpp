#include "pod2/hecke.hpp"

#include <numeric>

#include "pod2/errors.hpp"
#include "pod2/recipe.hpp"

namespace pod2 {

TauTable::TauTable(std::vector<Integer> values) : values_(std::move(values)) {
  if (values_.size() < 2) throw StructuralError("tau table must have limit >= 2");
}

const Integer& TauTable::at(std::size_t n) const {
  if (n >= values_.size()) {
    throw RefusalError("tau table holds n < " + std::to_string(values_.size()) + "; index " +
                       std::to_string(n) + " needs a table of limit >= " + std::to_string(n + 1));
  }
  return values_[n];
}

TauTable delta_series(std::size_t limit) {
  if (limit < 2) throw StructuralError("tau table limit must be >= 2");
  const TruncatedSeries delta = expand_eta_quotient({{{1, 24}}, 1}, limit);
  return TauTable(std::vector<Integer>(delta.coefficients().begin(), delta.coefficients().end()));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

TruncatedSeries hecke_Tp(const TruncatedSeries& s, std::uint64_t p, unsigned k) {
  if (!is_prime(p)) throw DomainError("Hecke operator T_p needs a prime p, got " + std::to_string(p));
  if (k < 2 || k % 2 != 0) throw DomainError("Hecke weight must be even and >= 2, got " + std::to_string(k));
  if (s.order() < p) {
    throw DomainError("T_" + std::to_string(p) + " needs a series of order >= p, got " +
                      std::to_string(s.order()));
  }
  Integer weight;
  mpz_ui_pow_ui(weight.get_mpz_t(), p, k - 1);
  const std::size_t n_out = (s.order() - 1) / p + 1;
  std::vector<Integer> out(n_out);
  for (std::size_t n = 0; n < n_out; ++n) {
    out[n] = s[p * n];
    if (n % p == 0) mpz_addmul(out[n].get_mpz_t(), weight.get_mpz_t(), s[n / p].get_mpz_t());
  }
  return TruncatedSeries(std::move(out));
}

VerificationReport eigenform_check(const TauTable& table, std::uint64_t p, std::size_t limit) {
  if (limit == 0) throw StructuralError("eigenform check limit must be >= 1");
  const std::size_t needed = std::max<std::size_t>(p * (limit - 1) + 1, p + 1);
  table.at(needed - 1);
  const TruncatedSeries delta = table.as_series();
  const TruncatedSeries lhs = truncate(hecke_Tp(truncate(delta, needed), p, 12), limit);
  const TruncatedSeries rhs = scale(truncate(delta, limit), table[p]);
  return compare_series("delta-eigenform-T" + std::to_string(p),
                        "Delta | T_{" + std::to_string(p) + ",12} = tau(" + std::to_string(p) + ") Delta",
                        lhs, rhs, 0, limit);
}

VerificationReport tau_multiplicativity_check(const TauTable& table, std::size_t limit) {
  if (limit > table.limit()) table.at(limit - 1);
  VerificationReport report;
  report.claim = "tau-multiplicativity";
  report.statement = "tau(mn) = tau(m) tau(n) for (m,n) = 1; tau(p^l) = tau(p) tau(p^{l-1}) - p^11 tau(p^{l-2})";
  report.range_checked = limit;
  std::size_t pairs = 0;
  for (std::size_t m = 2; m * m < limit; ++m) {
    for (std::size_t n = m + 1; m * n < limit; ++n) {
      if (std::gcd(m, n) != 1) continue;
      ++pairs;
      const Integer rhs = table[m] * table[n];
      if (table[m * n] != rhs) report.record(m * n, table[m * n], rhs);
    }
  }
  std::size_t powers = 0;
  for (std::size_t p = 2; p * p < limit; ++p) {
    if (!is_prime(p)) continue;
    Integer p11;
    mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
    for (std::size_t prev = 1, cur = p, next = p * p; next < limit; prev = cur, cur = next, next *= p) {
      ++powers;
      const Integer rhs = table[p] * table[cur] - p11 * table[prev];
      if (table[next] != rhs) report.record(next, table[next], rhs);
    }
  }
  report.notes.push_back(std::to_string(pairs) + " coprime pairs, " + std::to_string(powers) +
                         " prime powers checked");
  return report;
}

VerificationReport tau_parity_check(const TauTable& table, std::size_t limit) {
  if (limit > table.limit()) table.at(limit - 1);
  VerificationReport report;
  report.claim = "tau-parity";
  report.statement = "tau(n) odd iff n is an odd square";
  report.modulus = 2;
  report.range_checked = limit;
  for (std::size_t n = 1; n < limit; ++n) {
    const int parity = mpz_odd_p(table[n].get_mpz_t()) ? 1 : 0;
    const int expected = (n % 2 == 1 && is_perfect_square(n)) ? 1 : 0;
    if (parity != expected) report.record(n, parity, expected);
  }
  return report;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1U) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

void require_odd_prime(std::uint64_t p) {
  if (p % 2 == 0 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("progression parameters overflow 64 bits");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

}  // namespace

int legendre(std::int64_t a, std::uint64_t p) {
  require_odd_prime(p);
  const auto sp = static_cast<std::int64_t>(p);
  const auto residue = static_cast<std::uint64_t>(((a % sp) + sp) % sp);
  if (residue == 0) return 0;
  return pow_mod(residue, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<std::uint64_t> theorem3_s_values(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= 8 * p; s += 8) {
    if (legendre(static_cast<std::int64_t>(s), p) == -1) out.push_back(s);
  }
  return out;
}

std::vector<std::uint64_t> theorem3_r_values(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r <= 8 * p; ++r) {
    if ((r * p) % 8 == 1 && std::gcd(r, p) == 1) out.push_back(r);
  }
  return out;
}

std::vector<std::uint64_t> theorem4_r_values(std::uint64_t p) {
  require_odd_prime(p);
  if (p % 8 != 7) throw DomainError("the mod 8 family needs p = 7 (mod 8), got " + std::to_string(p));
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 7; r < 8 * p; r += 8) {
    if (std::gcd(r, p) == 1) out.push_back(r);
  }
  return out;
}

PrimeFamilyParams::PrimeFamilyParams(FamilyKind kind, std::uint64_t p, std::uint64_t s_or_r, unsigned k,
                                     OffsetSign sign)
    : kind_(kind), p_(p), s_or_r_(s_or_r), k_(k) {
  require_odd_prime(p);
  const std::string tag = describe();
  if (s_or_r < 1) throw DomainError(tag + ": parameter must be >= 1");
  std::uint64_t numerator = 0;
  bool subtract_one = true;
  switch (kind) {
    case FamilyKind::kOddSquareGap:
    case FamilyKind::kOddSquareGapLifted: {
      if (kind == FamilyKind::kOddSquareGap && k != 0) throw DomainError(tag + ": k must be 0");
      if (s_or_r > 8 * p || s_or_r % 8 != 1) throw DomainError(tag + ": need 1 <= s <= 8p and s = 1 (mod 8)");
      if (legendre(static_cast<std::int64_t>(s_or_r), p) != -1) {
        throw DomainError(tag + ": need (s/p) = -1");
      }
      stride_ = checked_pow(p, 2 * k + 1);
      numerator = checked_mul(s_or_r, checked_pow(p, 2 * k));
      break;
    }
    case FamilyKind::kPrimePowerGap: {
      if (s_or_r > 8 * p || (s_or_r * p) % 8 != 1) throw DomainError(tag + ": need 1 <= r <= 8p and rp = 1 (mod 8)");
      if (std::gcd(s_or_r, p) != 1) throw DomainError(tag + ": need gcd(r, p) = 1");
      stride_ = checked_pow(p, 2 * k + 2);
      numerator = checked_mul(s_or_r, checked_pow(p, 2 * k + 1));
      break;
    }
    case FamilyKind::kMod8Family: {
      if (p % 8 != 7) throw DomainError(tag + ": need p = 7 (mod 8)");
      if (s_or_r >= 8 * p || s_or_r % 8 != 7) throw DomainError(tag + ": need 1 <= r < 8p and r = 7 (mod 8)");
      if (std::gcd(s_or_r, p) != 1) throw DomainError(tag + ": need gcd(r, p) = 1");
      stride_ = checked_pow(p, 2 * k + 2);
      numerator = checked_mul(s_or_r, checked_pow(p, 2 * k + 1));
      subtract_one = sign == OffsetSign::kMinusOne;
      break;
    }
  }
  if (subtract_one) {
    numerator -= 1;
  } else {
    numerator += 1;
  }
  if (numerator % 8 != 0) {
    throw DomainError(tag + ": offset " + std::to_string(numerator) + "/8 is not an integer");
  }
  offset_ = numerator / 8;
}

std::string PrimeFamilyParams::describe() const {
  const char* name = "";
  switch (kind_) {
    case FamilyKind::kOddSquareGap: name = "odd-square-gap"; break;
    case FamilyKind::kOddSquareGapLifted: name = "odd-square-gap-lifted"; break;
    case FamilyKind::kPrimePowerGap: name = "prime-power-gap"; break;
    case FamilyKind::kMod8Family: name = "mod8-family"; break;
  }
  const char* param = (kind_ == FamilyKind::kOddSquareGap || kind_ == FamilyKind::kOddSquareGapLifted) ? "s" : "r";
  return std::string(name) + "(p=" + std::to_string(p_) + ", " + param + "=" + std::to_string(s_or_r_) +
         ", k=" + std::to_string(k_) + ")";
}

std::size_t required_table_limit(std::uint64_t stride, std::uint64_t max_offset, std::size_t count) {
  if (count == 0) return max_offset + 1;
  return checked_mul(stride, count - 1) + max_offset + 1;
}

void check_progression(const PrimeFamilyParams& params, const Pod2Table& table, std::size_t count,
                       VerificationReport& report) {
  const std::size_t needed = required_table_limit(params.stride(), params.offset(), count);
  if (needed > table.limit()) {
    throw RefusalError(params.describe() + " needs a pod2 table of limit >= " + std::to_string(needed) +
                       ", have " + std::to_string(table.limit()));
  }
  const unsigned long m = params.modulus();
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t arg = params.stride() * n + params.offset();
    if (mpz_divisible_ui_p(table[arg].get_mpz_t(), m) == 0) report.record(arg, table[arg], 0);
  }
}

namespace {

VerificationReport family_report(std::string name, std::string statement, unsigned modulus, std::size_t count) {
  VerificationReport report;
  report.claim = std::move(name);
  report.statement = std::move(statement);
  report.modulus = modulus;
  report.range_checked = count;
  return report;
}

void note_tau_hypothesis(const TauTable& tau, std::uint64_t p, VerificationReport& report) {
  const Integer& tp = tau.at(p);
  const bool even = mpz_even_p(tp.get_mpz_t()) != 0;
  const std::string text = "hypothesis tau(" + std::to_string(p) + ") = " + tp.get_str() + " even: " +
                           (even ? "held" : "FAILED");
  if (even) {
    report.notes.push_back(text);
  } else {
    report.reject(text);
  }
}

}  // namespace

VerificationReport verify_theorem3_i(std::uint64_t p, std::size_t count, const Pod2Table& table) {
  auto report = family_report("odd-square-gap-p" + std::to_string(p),
                              "pod2(p n + (s-1)/8) = 0 (mod 2), s = 1 (mod 8), (s/p) = -1", 2, count);
  for (auto s : theorem3_s_values(p)) {
    const PrimeFamilyParams params(FamilyKind::kOddSquareGap, p, s, 0);
    report.notes.push_back(params.describe() + ": pod2(" + std::to_string(params.stride()) + "n+" +
                           std::to_string(params.offset()) + ")");
    check_progression(params, table, count, report);
  }
  return report;
}

VerificationReport verify_theorem3_ii(std::uint64_t p, unsigned k, std::size_t count,
                                      const Pod2Table& table, const TauTable& tau) {
  auto report = family_report("odd-square-gap-lifted-p" + std::to_string(p) + "-k" + std::to_string(k),
                              "pod2(p^{2k+1} n + (s p^{2k} - 1)/8) = 0 (mod 2)", 2, count);
  if (k == 0) report.notes.push_back("k = 0 reduces to the unlifted family");
  note_tau_hypothesis(tau, p, report);
  for (auto s : theorem3_s_values(p)) {
    const PrimeFamilyParams params(FamilyKind::kOddSquareGapLifted, p, s, k);
    report.notes.push_back(params.describe() + ": pod2(" + std::to_string(params.stride()) + "n+" +
                           std::to_string(params.offset()) + ")");
    check_progression(params, table, count, report);
  }
  return report;
}

VerificationReport verify_theorem3_iii(std::uint64_t p, unsigned k, std::size_t count,
                                       const Pod2Table& table, const TauTable& tau) {
  auto report = family_report("prime-power-gap-p" + std::to_string(p) + "-k" + std::to_string(k),
                              "pod2(p^{2k+2} n + (r p^{2k+1} - 1)/8) = 0 (mod 2), rp = 1 (mod 8)", 2, count);
  note_tau_hypothesis(tau, p, report);
  for (auto r : theorem3_r_values(p)) {
    const PrimeFamilyParams params(FamilyKind::kPrimePowerGap, p, r, k);
    report.notes.push_back(params.describe() + ": pod2(" + std::to_string(params.stride()) + "n+" +
                           std::to_string(params.offset()) + ")");
    check_progression(params, table, count, report);
  }
  return report;
}

VerificationReport verify_theorem4(std::uint64_t p, unsigned k, std::size_t count, const Pod2Table& table,
                                   OffsetSign sign) {
  const bool verbatim = sign == OffsetSign::kPlusOne;
  auto report = family_report(
      "mod8-family-p" + std::to_string(p) + "-k" + std::to_string(k) + (verbatim ? "-plus-one-offset" : ""),
      verbatim ? "pod2(p^{2k+2} n + (r p^{2k+1} + 1)/8) = 0 (mod 8)"
               : "pod2(p^{2k+2} n + (r p^{2k+1} - 1)/8) = 0 (mod 8)",
      8, count);
  for (auto r : theorem4_r_values(p)) {
    try {
      const PrimeFamilyParams params(FamilyKind::kMod8Family, p, r, k, sign);
      report.notes.push_back(params.describe() + ": pod2(" + std::to_string(params.stride()) + "n+" +
                             std::to_string(params.offset()) + ")");
      check_progression(params, table, count, report);
    } catch (const DomainError& e) {
      report.reject(std::string("rejected at construction: ") + e.what());
    }
  }
  return report;
}

VerificationReport theorem3_i_triangular_avoidance(std::uint64_t p, std::size_t count) {
  auto report = family_report("odd-square-gap-triangular-p" + std::to_string(p),
                              "p n + (s-1)/8 is never triangular", 2, count);
  for (auto s : theorem3_s_values(p)) {
    const PrimeFamilyParams params(FamilyKind::kOddSquareGap, p, s, 0);
    for (std::size_t n = 0; n < count; ++n) {
      const std::size_t arg = params.stride() * n + params.offset();
      if (is_triangular(arg)) report.record(arg, 1, 0);
    }
  }
  return report;
}

std::vector<VerificationReport> delta_pod2_mod2_link(std::size_t order) {
  if (order == 0) throw StructuralError("order must be >= 1");
  struct Named {
    const char* name;
    TruncatedSeries series;
  };
  const std::vector<Named> series = {
      {"pod2(n) q^{8n+1}", evaluate(recipe::magnified(recipe::pod2(), 8, 1), order)},
      {"q f16^2 f64/(f8 f32^2)", expand_eta_quotient({{{16, 2}, {64, 1}, {8, -1}, {32, -2}}, 1}, order)},
      {"Delta", expand_eta_quotient({{{1, 24}}, 1}, order)},
      {"sum q^{(2n+1)^2}", evaluate(recipe::named("odd_square_indicator"), order)},
  };
  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < series.size(); ++i) {
    for (std::size_t j = i + 1; j < series.size(); ++j) {
      out.push_back(compare_series("delta-pod2-link-" + std::to_string(i) + std::to_string(j),
                                   std::string(series[i].name) + " = " + series[j].name + " (mod 2)",
                                   series[i].series, series[j].series, 2, order));
    }
  }
  return out;
}

}  // namespace pod2
