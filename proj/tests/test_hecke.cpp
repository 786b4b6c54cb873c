#include <doctest.h>

#include "oracles.hpp"
#include "pod2/errors.hpp"
#include "pod2/hecke.hpp"

using namespace pod2;

namespace {

const TauTable& tau2000() {
  static const TauTable t = delta_series(2000);
  return t;
}

const Pod2Table& pod2_table() {
  static const Pod2Table t = pod2_dp(20000);
  return t;
}

Integer ipow(unsigned long b, unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

}  // namespace

TEST_CASE("tau values") {
  const auto& t = tau2000();
  CHECK(t[1] == 1);
  const auto brute = oracle::naive_pow(oracle::naive_eta(1, 3), 24);
  CHECK(t[2] == brute[1]);
  CHECK(t[2] == -24);
  const std::vector<long> first = {1, -24, 252, -1472, 4830, -6048, -16744};
  for (std::size_t n = 1; n <= first.size(); ++n) CHECK(t[n] == first[n - 1]);
  CHECK(t[6] == t[2] * t[3]);
  CHECK(t[12] == t[4] * t[3]);
  CHECK(t[4] == t[2] * t[2] - ipow(2, 11) * t[1]);
  CHECK(t[9] == t[3] * t[3] - ipow(3, 11) * t[1]);
  CHECK_THROWS_AS(t.at(2000), RefusalError);
  CHECK_THROWS_AS(delta_series(1), StructuralError);
}

TEST_CASE("hecke operator on Delta") {
  const auto delta = tau2000().as_series();
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    CAPTURE(p);
    const auto image = hecke_Tp(delta, p);
    CHECK(image.order() == 1999 / p + 1);
    CHECK(image[1] == tau2000()[p]);
    CHECK(image == scale(truncate(delta, image.order()), tau2000()[p]));
    CHECK(eigenform_check(tau2000(), p, 1999 / p + 1).passed());
  }
  CHECK(hecke_Tp(TruncatedSeries::zero(50), 5).is_zero());
  CHECK_THROWS_AS(hecke_Tp(delta, 4), DomainError);
  CHECK_THROWS_AS(hecke_Tp(delta, 2, 11), DomainError);
  CHECK_THROWS_AS(hecke_Tp(truncate(delta, 3), 5), DomainError);
}

TEST_CASE("eigenform check catches a perturbed table") {
  std::vector<Integer> v(tau2000().values().begin(), tau2000().values().end());
  v[5] += 1;
  const TauTable bad(v);
  const auto r = eigenform_check(bad, 2, 250);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure() == 5);
}

TEST_CASE("tau multiplicativity and parity") {
  CHECK(tau_multiplicativity_check(tau2000(), 300).passed());
  CHECK(tau_multiplicativity_check(tau2000(), 2000).passed());
  CHECK(tau_parity_check(tau2000(), 2000).passed());
}

TEST_CASE("legendre matches a search over squares for p < 100") {
  for (std::uint64_t p = 3; p < 100; p += 2) {
    if (!is_prime(p)) continue;
    for (std::int64_t a = -2 * static_cast<std::int64_t>(p); a <= 2 * static_cast<std::int64_t>(p); ++a) {
      CHECK(legendre(a, p) == oracle::legendre_by_squares(a, static_cast<long long>(p)));
    }
  }
  CHECK(legendre(17, 5) == -1);
  CHECK(legendre(1, 97) == 1);
  CHECK(legendre(97, 97) == 0);
  CHECK_THROWS_AS(legendre(1, 2), DomainError);
  CHECK_THROWS_AS(legendre(1, 9), DomainError);
}

TEST_CASE("parameter lists") {
  using V = std::vector<std::uint64_t>;
  CHECK(theorem3_s_values(3) == V{17});
  CHECK(theorem3_s_values(5) == V{17, 33});
  CHECK(theorem3_r_values(3) == V{11, 19});
  CHECK(theorem3_r_values(5) == V{13, 21, 29, 37});
  CHECK(theorem4_r_values(7) == V{15, 23, 31, 39, 47, 55});
  CHECK_THROWS_AS(theorem4_r_values(5), DomainError);
  CHECK_THROWS_AS(theorem3_s_values(9), DomainError);
  // Direct filter for the remaining primes.
  for (std::uint64_t p : {11u, 13u}) {
    V expected;
    for (std::uint64_t s = 1; s <= 8 * p; s += 8) {
      if (oracle::legendre_by_squares(static_cast<long long>(s), static_cast<long long>(p)) == -1) expected.push_back(s);
    }
    CHECK(theorem3_s_values(p) == expected);
  }
}

TEST_CASE("family offsets") {
  CHECK(PrimeFamilyParams(FamilyKind::kOddSquareGapLifted, 3, 17, 1).offset() == 19);
  CHECK(PrimeFamilyParams(FamilyKind::kOddSquareGapLifted, 3, 17, 1).stride() == 27);
  CHECK(PrimeFamilyParams(FamilyKind::kOddSquareGapLifted, 5, 17, 1).offset() == 53);
  CHECK(PrimeFamilyParams(FamilyKind::kPrimePowerGap, 3, 11, 1).offset() == 37);
  CHECK(PrimeFamilyParams(FamilyKind::kPrimePowerGap, 3, 19, 1).offset() == 64);
  CHECK(PrimeFamilyParams(FamilyKind::kPrimePowerGap, 3, 19, 1).stride() == 81);
  CHECK(PrimeFamilyParams(FamilyKind::kMod8Family, 7, 15, 0).offset() == 13);
  CHECK(PrimeFamilyParams(FamilyKind::kMod8Family, 7, 23, 0).offset() == 20);
  CHECK(PrimeFamilyParams(FamilyKind::kMod8Family, 7, 23, 0).stride() == 49);
  CHECK(PrimeFamilyParams(FamilyKind::kMod8Family, 7, 23, 0).modulus() == 8);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kPrimePowerGap, 3, 3, 1), DomainError);
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kOddSquareGap, 3, 9, 0), DomainError);
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kOddSquareGap, 3, 1, 0), DomainError);
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kMod8Family, 7, 15, 0, OffsetSign::kPlusOne), DomainError);
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kMod8Family, 5, 15, 0), DomainError);
  CHECK_THROWS_AS(PrimeFamilyParams(FamilyKind::kOddSquareGap, 4, 17, 0), DomainError);
}

TEST_CASE("first family") {
  for (std::uint64_t p : {3u, 5u, 11u, 13u}) {
    CAPTURE(p);
    const auto r = verify_theorem3_i(p, 400, pod2_table());
    CHECK(r.passed());
    CHECK(theorem3_i_triangular_avoidance(p, 400).passed());
    for (auto s : theorem3_s_values(p)) {
      for (std::size_t n = 0; n < 400; ++n) CHECK(mpz_even_p(pod2_table()[p * n + (s - 1) / 8].get_mpz_t()));
    }
  }
  CHECK(verify_theorem3_i(3, 600, pod2_table()).passed());
  CHECK_THROWS_AS(verify_theorem3_i(3, 600, pod2_dp(100)), RefusalError);
}

TEST_CASE("lifted families") {
  CHECK(verify_theorem3_ii(3, 1, 70, pod2_table(), tau2000()).passed());
  CHECK(verify_theorem3_ii(5, 1, 15, pod2_table(), tau2000()).passed());
  CHECK(verify_theorem3_iii(3, 1, 24, pod2_table(), tau2000()).passed());
  for (std::size_t n = 0; n < 70; ++n) CHECK(mpz_even_p(pod2_table()[27 * n + 19].get_mpz_t()));
  for (std::size_t n = 0; n < 24; ++n) {
    CHECK(mpz_even_p(pod2_table()[81 * n + 37].get_mpz_t()));
    CHECK(mpz_even_p(pod2_table()[81 * n + 64].get_mpz_t()));
  }
  const auto k0 = verify_theorem3_ii(3, 0, 400, pod2_table(), tau2000());
  const auto direct = verify_theorem3_i(3, 400, pod2_table());
  CHECK(k0.passed() == direct.passed());
  CHECK(k0.range_checked == direct.range_checked);
}

TEST_CASE("mod 8 family") {
  const auto r = verify_theorem4(7, 0, 40, pod2_table());
  CHECK(r.passed());
  for (auto rr : theorem4_r_values(7)) {
    const std::size_t offset = (rr * 7 - 1) / 8;
    for (std::size_t n = 0; n < 40; ++n) CHECK(mpz_divisible_ui_p(pod2_table()[49 * n + offset].get_mpz_t(), 8));
  }
  const auto plus = verify_theorem4(7, 0, 40, pod2_table(), OffsetSign::kPlusOne);
  CHECK_FALSE(plus.passed());
}

TEST_CASE("Delta and pod2 agree mod 2") {
  const auto reports = delta_pod2_mod2_link(1000);
  CHECK(reports.size() == 6);
  CHECK(all_passed(reports));
  const auto t = tau2000();
  CHECK(mpz_odd_p(t[9].get_mpz_t()));
  CHECK(mpz_even_p(t[17].get_mpz_t()));
  CHECK(pod2_table()[2] == 0);
}
