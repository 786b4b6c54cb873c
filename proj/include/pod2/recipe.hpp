#pragma once

// Series recipes: small expression trees describing how to build a
// q-series (eta quotients, sums, products, progression sections,
// magnifications, a few named theta-type series).  Claims are stated in
// terms of recipes so the claim catalog can live in a data file.

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pod2/series.hpp"

namespace pod2 {

struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;

/// coefficient * q^shift * prod f_j^{e_j}
struct EtaTerm {
  Integer coefficient = 1;
  EtaQuotientSpec quotient;
};
struct SumOf {
  std::vector<Recipe> terms;
};
struct ProductOf {
  std::vector<Recipe> factors;
};
struct Scaled {
  RecipePtr source;
  Integer factor;
};
/// n-th coefficient of the result is the (a*n + b)-th of the source.
struct Section {
  RecipePtr source;
  std::size_t a = 1;
  std::size_t b = 0;
};
/// source(q^m) * q^shift
struct Magnified {
  RecipePtr source;
  std::size_t m = 1;
  std::size_t shift = 0;
};
struct ThetaTerm {
  int sign_a = 1;
  std::int64_t exp_a = 1;
  int sign_b = 1;
  std::int64_t exp_b = 1;
};
/// One of named_series_names().
struct NamedSeries {
  std::string name;
};
struct ZeroSeries {};

struct Recipe {
  std::variant<EtaTerm, SumOf, ProductOf, Scaled, Section, Magnified, ThetaTerm, NamedSeries,
               ZeroSeries>
      node;
};

namespace recipe {

Recipe eta(EtaQuotientSpec quotient, Integer coefficient = 1);
Recipe sum(std::vector<Recipe> terms);
Recipe product(std::vector<Recipe> factors);
Recipe scaled(Recipe source, Integer factor);
Recipe section(Recipe source, std::size_t a, std::size_t b);
Recipe magnified(Recipe source, std::size_t m, std::size_t shift = 0);
Recipe theta(int sign_a, std::int64_t exp_a, int sign_b, std::int64_t exp_b);
Recipe named(std::string name);
Recipe zero();

/// sum_{n>=0} pod2(n) q^n as the eta quotient f_2^2 f_8/(f_1 f_4^2).
Recipe pod2();

}  // namespace recipe

/// Built-in series available to NamedSeries:
///   pod2_dp                sum pod2(n) q^n from the partition-count DP
///   triangular_indicator   sum_{k>=0} q^{k(k+1)/2}
///   odd_square_indicator   sum_{k>=0} q^{(2k+1)^2}
///   square_sum             sum_{n>=1} q^{n^2}
///   signed_square_sum      sum_{n>=1} (-1)^n q^{n^2}
///   jacobi_cube_sum        sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2}
const std::vector<std::string>& named_series_names();

/// Exactly `order` coefficients of the recipe's series.  Sources of sections
/// and magnifications are built to whatever order the target needs.
TruncatedSeries evaluate(const Recipe& r, std::size_t order);

Recipe recipe_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Recipe& r);

}  // namespace pod2
