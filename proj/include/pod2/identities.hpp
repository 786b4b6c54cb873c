#pragma once

// Finite coefficient checks of the theta-function dissections, the
// 3-dissection of the pod2 generating function and its mod 2 / mod 8
// consequences.
//
// Each verifier builds a CongruenceClaim and checks it coefficient by
// coefficient.  Verifiers that have a perturbed counterpart take a
// Variant; kNegativeControl must fail, which keeps the checker honest.

#include <cstddef>
#include <string>
#include <vector>

#include "pod2/partition.hpp"
#include "pod2/recipe.hpp"
#include "pod2/report.hpp"

namespace pod2 {

/// lhs == rhs (modulus 0) or lhs == rhs (mod modulus), for n < check_order.
struct CongruenceClaim {
  std::string name;
  std::string statement;
  Recipe lhs;
  Recipe rhs;
  Integer modulus = 0;
  std::size_t check_order = 1;
};

VerificationReport verify(const CongruenceClaim& claim);

namespace identities {

enum class Variant { kAsStated, kNegativeControl };

// f2^2/f1 = f6 f9^2/(f3 f18) + q f18^2/f9.
// Control: the q in front of the second term is dropped.
CongruenceClaim psi_dissection_claim(std::size_t order, Variant v = Variant::kAsStated);
VerificationReport verify_lemma_psi_dissection(std::size_t order, Variant v = Variant::kAsStated);

// f2/f1^2 = f6^4 f9^6/(f3^8 f18^3) + 2q f6^3 f9^3/f3^7 + 4q^2 f6^2 f18^3/f3^6.
// Control: the middle coefficient 2 becomes 3.
CongruenceClaim inverse_phi_dissection_claim(std::size_t order, Variant v = Variant::kAsStated);
VerificationReport verify_lemma_inverse_phi_dissection(std::size_t order,
                                                       Variant v = Variant::kAsStated);

/// The six eta-quotient terms (shifts q^0, q^4, q^8, q^1, q^5, q^9) whose sum is
/// the pod2 series.
std::vector<Recipe> six_term_dissection();
// Control: the q^9 term is dropped.
CongruenceClaim full_dissection_claim(std::size_t order, Variant v = Variant::kAsStated);
VerificationReport verify_full_dissection(std::size_t order, Variant v = Variant::kAsStated);

/// Right-hand sides of the exact 3-dissection components, indexed by residue 0, 1, 2.
Recipe progression_rhs(std::size_t residue);
/// pod2(3n+r) as exact eta-quotient sums, for r = 2, 0, 1 (in that order).
std::vector<CongruenceClaim> progression_claims(std::size_t order);
std::vector<VerificationReport> verify_progression_identities(std::size_t order);

/// pod2(3n+2) = 0, pod2(3n) = f1, pod2(3n+1) = f3^3, pod2(9n+1) = f1^3, all mod 2.
/// Control: pod2(3n+1) compared against the undilated f1^3.
std::vector<CongruenceClaim> mod2_reduction_claims(std::size_t order);
CongruenceClaim mod2_reduction_control(std::size_t order);
std::vector<VerificationReport> verify_mod2_reductions(std::size_t order);

/// f1^3 = sum (-1)^n (2n+1) q^{n(n+1)/2} exactly, and = sum q^{n(n+1)/2} mod 2.
std::vector<CongruenceClaim> jacobi_cube_claims(std::size_t order);
std::vector<VerificationReport> jacobi_cube(std::size_t order);

/// For n < limit: pod2(3n+1) is odd iff n = 3 k(k+1)/2.  Needs table.limit() > 3(limit-1)+1.
VerificationReport theorem2_characterization(const Pod2Table& table, std::size_t limit);
VerificationReport theorem2_characterization(std::size_t limit);

/// (a) (sum_{n>=1} (-1)^n q^{n^2})^2 = sum_{n>=1} q^{2n^2} mod 2.
/// (b) pod2 = psi(q) (1 - 2 S(q^4) + 4 S(q^8)) mod 8, S = sum_{n>=1} (-1)^n q^{n^2}.
/// Control: (b) at modulus 16.
std::vector<CongruenceClaim> mod8_expansion_claims(std::size_t order, Variant v = Variant::kAsStated);
std::vector<VerificationReport> verify_mod8_expansion(std::size_t order,
                                                      Variant v = Variant::kAsStated);

}  // namespace identities
}  // namespace pod2
