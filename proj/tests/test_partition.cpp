#include <doctest.h>

#include "oracles.hpp"
#include "pod2/errors.hpp"
#include "pod2/partition.hpp"

using namespace pod2;

TEST_CASE("first values") {
  const auto t = pod2_dp(12);
  const std::vector<long> expected = {1, 1, 0, 1, 2, 2, 1, 2, 4, 4, 3, 4};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    CAPTURE(n);
    CHECK(t[n] == expected[n]);
    CHECK(t[n] == oracle::pod2_brute(n));
  }
}

TEST_CASE("brute-force filter agrees with the DP up to 30") {
  const auto t = pod2_dp(31);
  for (std::size_t n = 0; n <= 30; ++n) CHECK(t[n] == oracle::pod2_brute(n));
}

TEST_CASE("DP is independent of the part-class order") {
  const auto a = pod2_dp(600, PartClassOrder::kOddFirst);
  const auto b = pod2_dp(600, PartClassOrder::kResidueFirst);
  const auto c = pod2_dp(600, PartClassOrder::kInterleaved);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
  CHECK(std::equal(a.values().begin(), a.values().end(), c.values().begin()));
}

TEST_CASE("series expansion equals the DP") {
  const auto r = pod2_series_check(2000);
  CHECK(r.passed());
  CHECK(r.range_checked == 2000);
  const auto s = pod2_from_series(500);
  const auto d = pod2_dp(500);
  CHECK(std::equal(s.values().begin(), s.values().end(), d.values().begin()));
}

TEST_CASE("a corrupted quotient is caught") {
  const auto r = pod2_series_check(200, {{{2, 2}, {8, 1}, {1, -1}, {4, -1}}, 0});
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure() <= 20);
}

TEST_CASE("enumeration") {
  CHECK(pod2_enumerate(0) == 1);
  CHECK(pod2_enumerate(8) == 4);
  CHECK(pod2_enumeration_check(60).passed());
  CHECK(pod2_enumerate(kEnumerateMax) == pod2_dp(kEnumerateMax + 1)[kEnumerateMax]);
  CHECK_THROWS_AS(pod2_enumerate(kEnumerateMax + 1), RefusalError);
}

TEST_CASE("table refuses out-of-range lookups") {
  const auto t = pod2_dp(10);
  CHECK(t.at(9) == 4);
  CHECK_THROWS_AS(t.at(10), RefusalError);
  CHECK_THROWS_AS(pod2_dp(0), StructuralError);
}

TEST_CASE("parity law") {
  const auto t = pod2_dp(2000);
  CHECK(pod2_parity_law_check(t, 2000).passed());
  CHECK_THROWS_AS(pod2_parity_law_check(t, 2001), RefusalError);
  // Independent restatement: odd exactly at triangular m.
  for (std::size_t m = 0; m < 2000; ++m) {
    CAPTURE(m);
    CHECK(mpz_odd_p(t[m].get_mpz_t()) == is_triangular(m));
  }
}

TEST_CASE("square and triangular predicates") {
  CHECK(is_perfect_square(0));
  CHECK(is_perfect_square(1));
  CHECK(is_perfect_square(1ULL << 62));
  CHECK_FALSE(is_perfect_square((1ULL << 62) - 1));
  CHECK(is_triangular(0));
  CHECK(is_triangular(10));
  CHECK_FALSE(is_triangular(11));
}
