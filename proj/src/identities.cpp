#include "pod2/identities.hpp"

#include "pod2/errors.hpp"

namespace pod2 {

VerificationReport verify(const CongruenceClaim& claim) {
  if (claim.check_order == 0) throw StructuralError("claim '" + claim.name + "' has check order 0");
  const TruncatedSeries lhs = evaluate(claim.lhs, claim.check_order);
  const TruncatedSeries rhs = evaluate(claim.rhs, claim.check_order);
  return compare_series(claim.name, claim.statement, lhs, rhs, claim.modulus, claim.check_order);
}

namespace identities {

namespace {

using recipe::eta;

EtaQuotientSpec q(std::size_t shift, std::vector<EtaFactor> factors) {
  return {std::move(factors), shift};
}

std::vector<VerificationReport> verify_all(const std::vector<CongruenceClaim>& claims) {
  std::vector<VerificationReport> out;
  out.reserve(claims.size());
  for (const auto& c : claims) out.push_back(verify(c));
  return out;
}

}  // namespace

CongruenceClaim psi_dissection_claim(std::size_t order, Variant v) {
  const std::size_t second_shift = v == Variant::kAsStated ? 1 : 0;
  return {
      v == Variant::kAsStated ? "lemma-psi-dissection" : "lemma-psi-dissection-negative-control",
      "f2^2/f1 = f6 f9^2/(f3 f18) + q f18^2/f9",
      eta(q(0, {{2, 2}, {1, -1}})),
      recipe::sum({
          eta(q(0, {{6, 1}, {9, 2}, {3, -1}, {18, -1}})),
          eta(q(second_shift, {{18, 2}, {9, -1}})),
      }),
      0,
      order,
  };
}

VerificationReport verify_lemma_psi_dissection(std::size_t order, Variant v) {
  return verify(psi_dissection_claim(order, v));
}

CongruenceClaim inverse_phi_dissection_claim(std::size_t order, Variant v) {
  const Integer middle = v == Variant::kAsStated ? 2 : 3;
  return {
      v == Variant::kAsStated ? "lemma-inverse-phi-dissection"
                              : "lemma-inverse-phi-dissection-negative-control",
      "f2/f1^2 = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6",
      eta(q(0, {{2, 1}, {1, -2}})),
      recipe::sum({
          eta(q(0, {{6, 4}, {9, 6}, {3, -8}, {18, -3}})),
          eta(q(1, {{6, 3}, {9, 3}, {3, -7}}), middle),
          eta(q(2, {{6, 2}, {18, 3}, {3, -6}}), 4),
      }),
      0,
      order,
  };
}

VerificationReport verify_lemma_inverse_phi_dissection(std::size_t order, Variant v) {
  return verify(inverse_phi_dissection_claim(order, v));
}

std::vector<Recipe> six_term_dissection() {
  return {
      eta(q(0, {{6, 1}, {9, 2}, {24, 4}, {36, 6}, {3, -1}, {18, -1}, {12, -8}, {72, -3}})),
      eta(q(4, {{6, 1}, {9, 2}, {24, 3}, {36, 3}, {3, -1}, {18, -1}, {12, -7}}), 2),
      eta(q(8, {{6, 1}, {9, 2}, {24, 2}, {72, 3}, {3, -1}, {18, -1}, {12, -6}}), 4),
      eta(q(1, {{18, 2}, {24, 4}, {36, 6}, {9, -1}, {12, -8}, {72, -3}})),
      eta(q(5, {{18, 2}, {24, 3}, {36, 3}, {9, -1}, {12, -7}}), 2),
      eta(q(9, {{18, 2}, {24, 2}, {72, 3}, {9, -1}, {12, -6}}), 4),
  };
}

CongruenceClaim full_dissection_claim(std::size_t order, Variant v) {
  auto terms = six_term_dissection();
  if (v == Variant::kNegativeControl) terms.pop_back();
  return {
      v == Variant::kAsStated ? "six-term-dissection" : "six-term-dissection-negative-control",
      "sum pod2(n) q^n = six-term 3-dissection (shifts q^0,q^4,q^8,q^1,q^5,q^9)",
      recipe::pod2(),
      recipe::sum(std::move(terms)),
      0,
      order,
  };
}

VerificationReport verify_full_dissection(std::size_t order, Variant v) {
  return verify(full_dissection_claim(order, v));
}

Recipe progression_rhs(std::size_t residue) {
  switch (residue) {
    case 0:
      return recipe::sum({
          eta(q(0, {{2, 1}, {3, 2}, {8, 4}, {12, 6}, {1, -1}, {6, -1}, {4, -8}, {24, -3}})),
          eta(q(3, {{6, 2}, {8, 2}, {24, 3}, {3, -1}, {4, -6}}), 4),
      });
    case 1:
      return recipe::sum({
          eta(q(0, {{6, 2}, {8, 4}, {12, 6}, {3, -1}, {4, -8}, {24, -3}})),
          eta(q(1, {{2, 1}, {3, 2}, {8, 3}, {12, 3}, {1, -1}, {4, -7}, {6, -1}}), 2),
      });
    case 2:
      return recipe::sum({
          eta(q(1, {{6, 2}, {8, 3}, {12, 3}, {3, -1}, {4, -7}}), 2),
          eta(q(2, {{2, 1}, {3, 2}, {8, 2}, {24, 3}, {1, -1}, {6, -1}, {4, -6}}), 4),
      });
    default:
      throw DomainError("3-dissection residue must be 0, 1 or 2");
  }
}

std::vector<CongruenceClaim> progression_claims(std::size_t order) {
  return {
      {"pod2-3n+2-exact", "sum pod2(3n+2) q^n = 2q f6^2 f8^3 f12^3/(f3 f4^7) + 4q^2 f2 f3^2 f8^2 f24^3/(f1 f6 f4^6)",
       recipe::section(recipe::pod2(), 3, 2), progression_rhs(2), 0, order},
      {"pod2-3n-exact", "sum pod2(3n) q^n = f2 f3^2 f8^4 f12^6/(f1 f6 f4^8 f24^3) + 4q^3 f6^2 f8^2 f24^3/(f3 f4^6)",
       recipe::section(recipe::pod2(), 3, 0), progression_rhs(0), 0, order},
      {"pod2-3n+1-exact", "sum pod2(3n+1) q^n = f6^2 f8^4 f12^6/(f3 f4^8 f24^3) + 2q f2 f3^2 f8^3 f12^3/(f1 f4^7 f6)",
       recipe::section(recipe::pod2(), 3, 1), progression_rhs(1), 0, order},
  };
}

std::vector<VerificationReport> verify_progression_identities(std::size_t order) {
  return verify_all(progression_claims(order));
}

std::vector<CongruenceClaim> mod2_reduction_claims(std::size_t order) {
  return {
      {"pod2-3n+2-even", "pod2(3n+2) = 0 (mod 2)", recipe::section(recipe::pod2(), 3, 2),
       recipe::zero(), 2, order},
      {"pod2-3n-mod2", "sum pod2(3n) q^n = f1 (mod 2)", recipe::section(recipe::pod2(), 3, 0),
       eta(q(0, {{1, 1}})), 2, order},
      {"pod2-3n+1-mod2", "sum pod2(3n+1) q^n = f3^3 (mod 2)", recipe::section(recipe::pod2(), 3, 1),
       eta(q(0, {{3, 3}})), 2, order},
      {"pod2-9n+1-mod2", "sum pod2(9n+1) q^n = f1^3 (mod 2)", recipe::section(recipe::pod2(), 9, 1),
       eta(q(0, {{1, 3}})), 2, order},
  };
}

CongruenceClaim mod2_reduction_control(std::size_t order) {
  return {"pod2-3n+1-mod2-negative-control", "sum pod2(3n+1) q^n = f1^3 (mod 2) [undilated]",
          recipe::section(recipe::pod2(), 3, 1), eta(q(0, {{1, 3}})), 2, order};
}

std::vector<VerificationReport> verify_mod2_reductions(std::size_t order) {
  return verify_all(mod2_reduction_claims(order));
}

std::vector<CongruenceClaim> jacobi_cube_claims(std::size_t order) {
  return {
      {"jacobi-cube", "f1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2}", eta(q(0, {{1, 3}})),
       recipe::named("jacobi_cube_sum"), 0, order},
      {"jacobi-cube-mod2", "f1^3 = sum q^{n(n+1)/2} (mod 2)", eta(q(0, {{1, 3}})),
       recipe::named("triangular_indicator"), 2, order},
  };
}

std::vector<VerificationReport> jacobi_cube(std::size_t order) {
  return verify_all(jacobi_cube_claims(order));
}

VerificationReport theorem2_characterization(const Pod2Table& table, std::size_t limit) {
  if (limit == 0) throw StructuralError("characterization limit must be >= 1");
  table.at(3 * (limit - 1) + 1);
  VerificationReport report;
  report.claim = "pod2-3n+1-parity";
  report.statement = "pod2(3n+1) odd iff n = 3 T_k";
  report.modulus = 2;
  report.range_checked = limit;
  for (std::size_t n = 0; n < limit; ++n) {
    const int parity = mpz_odd_p(table[3 * n + 1].get_mpz_t()) ? 1 : 0;
    const int expected = (n % 3 == 0 && is_triangular(n / 3)) ? 1 : 0;
    if (parity != expected) report.record(n, parity, expected);
  }
  return report;
}

VerificationReport theorem2_characterization(std::size_t limit) {
  return theorem2_characterization(pod2_from_series(3 * limit + 2), limit);
}

std::vector<CongruenceClaim> mod8_expansion_claims(std::size_t order, Variant v) {
  const Recipe signed_squares = recipe::named("signed_square_sum");
  Recipe factor = recipe::sum({
      eta(q(0, {})),
      recipe::scaled(recipe::magnified(signed_squares, 4), -2),
      recipe::scaled(recipe::magnified(signed_squares, 8), 4),
  });
  const bool control = v == Variant::kNegativeControl;
  return {
      {"signed-square-sum-squared", "(sum_{n>=1} (-1)^n q^{n^2})^2 = sum_{n>=1} q^{2n^2} (mod 2)",
       recipe::product({signed_squares, signed_squares}),
       recipe::magnified(recipe::named("square_sum"), 2), 2, order},
      {control ? "pod2-mod8-expansion-negative-control" : "pod2-mod8-expansion",
       "sum pod2(n) q^n = psi(q) (1 - 2 sum (-1)^n q^{4n^2} + 4 sum (-1)^n q^{8n^2}) (mod 8)",
       recipe::pod2(), recipe::product({eta(q(0, {{2, 2}, {1, -1}})), std::move(factor)}),
       control ? 16 : 8, order},
  };
}

std::vector<VerificationReport> verify_mod8_expansion(std::size_t order, Variant v) {
  return verify_all(mod8_expansion_claims(order, v));
}

}  // namespace identities
}  // namespace pod2
