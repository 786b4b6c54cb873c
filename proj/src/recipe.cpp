#include "pod2/recipe.hpp"

#include <algorithm>

#include "pod2/errors.hpp"
#include "pod2/partition.hpp"

namespace pod2 {

namespace recipe {

Recipe eta(EtaQuotientSpec quotient, Integer coefficient) {
  return {EtaTerm{std::move(coefficient), std::move(quotient)}};
}
Recipe sum(std::vector<Recipe> terms) { return {SumOf{std::move(terms)}}; }
Recipe product(std::vector<Recipe> factors) { return {ProductOf{std::move(factors)}}; }
Recipe scaled(Recipe source, Integer factor) {
  return {Scaled{std::make_shared<const Recipe>(std::move(source)), std::move(factor)}};
}
Recipe section(Recipe source, std::size_t a, std::size_t b) {
  return {Section{std::make_shared<const Recipe>(std::move(source)), a, b}};
}
Recipe magnified(Recipe source, std::size_t m, std::size_t shift) {
  return {Magnified{std::make_shared<const Recipe>(std::move(source)), m, shift}};
}
Recipe theta(int sign_a, std::int64_t exp_a, int sign_b, std::int64_t exp_b) {
  return {ThetaTerm{sign_a, exp_a, sign_b, exp_b}};
}
Recipe named(std::string name) { return {NamedSeries{std::move(name)}}; }
Recipe zero() { return {ZeroSeries{}}; }
Recipe pod2() { return eta(pod2_eta_spec()); }

}  // namespace recipe

const std::vector<std::string>& named_series_names() {
  static const std::vector<std::string> names = {
      "pod2_dp",     "triangular_indicator", "odd_square_indicator",
      "square_sum",  "signed_square_sum",    "jacobi_cube_sum",
  };
  return names;
}

namespace {

TruncatedSeries evaluate_named(const std::string& name, std::size_t order) {
  std::vector<Integer> v(order);
  if (name == "pod2_dp") {
    const Pod2Table t = pod2_dp(order);
    std::copy(t.values().begin(), t.values().end(), v.begin());
  } else if (name == "triangular_indicator") {
    for (std::size_t k = 0; k * (k + 1) / 2 < order; ++k) v[k * (k + 1) / 2] = 1;
  } else if (name == "odd_square_indicator") {
    for (std::size_t k = 1; k * k < order; k += 2) v[k * k] = 1;
  } else if (name == "square_sum") {
    for (std::size_t n = 1; n * n < order; ++n) v[n * n] = 1;
  } else if (name == "signed_square_sum") {
    for (std::size_t n = 1; n * n < order; ++n) v[n * n] = (n % 2 == 0) ? 1 : -1;
  } else if (name == "jacobi_cube_sum") {
    for (std::size_t n = 0; n * (n + 1) / 2 < order; ++n) {
      const long weight = static_cast<long>(2 * n + 1);
      v[n * (n + 1) / 2] = (n % 2 == 0) ? weight : -weight;
    }
  } else {
    throw DomainError("unknown named series '" + name + "'");
  }
  return TruncatedSeries(std::move(v));
}

struct Evaluator {
  std::size_t order;

  TruncatedSeries operator()(const EtaTerm& t) const {
    TruncatedSeries s = expand_eta_quotient(t.quotient, order);
    return t.coefficient == 1 ? s : scale(s, t.coefficient);
  }
  TruncatedSeries operator()(const SumOf& s) const {
    TruncatedSeries acc = TruncatedSeries::zero(order);
    for (const auto& term : s.terms) acc = add(acc, evaluate(term, order));
    return acc;
  }
  TruncatedSeries operator()(const ProductOf& p) const {
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (const auto& f : p.factors) acc = mul(acc, evaluate(f, order));
    return acc;
  }
  TruncatedSeries operator()(const Scaled& s) const {
    return scale(evaluate(*s.source, order), s.factor);
  }
  TruncatedSeries operator()(const Section& s) const {
    if (s.a == 0 || s.b >= s.a) throw DomainError("section needs 0 <= b < a");
    const TruncatedSeries src = evaluate(*s.source, s.a * (order - 1) + s.b + 1);
    return extract_progression(src, s.a, s.b);
  }
  TruncatedSeries operator()(const Magnified& m) const {
    if (m.m == 0) throw DomainError("magnification factor must be positive");
    std::size_t src_order = 1;
    if (order > 1 + m.shift) src_order = (order - 1 - m.shift + m.m - 1) / m.m + 1;
    return truncate(magnify(evaluate(*m.source, src_order), m.m, m.shift), order);
  }
  TruncatedSeries operator()(const ThetaTerm& t) const {
    return theta_f_general(t.sign_a, t.exp_a, t.sign_b, t.exp_b, order);
  }
  TruncatedSeries operator()(const NamedSeries& n) const { return evaluate_named(n.name, order); }
  TruncatedSeries operator()(const ZeroSeries&) const { return TruncatedSeries::zero(order); }
};

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw StructuralError("expected an integer or decimal string, got " + j.dump());
}

const nlohmann::json& child(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw StructuralError(std::string("recipe is missing '") + key + "': " + j.dump());
  return j.at(key);
}

std::size_t size_field(const nlohmann::json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto v = j.at(key).get<long long>();
  if (v < 0) throw StructuralError(std::string("recipe field '") + key + "' must be >= 0");
  return static_cast<std::size_t>(v);
}

}  // namespace

TruncatedSeries evaluate(const Recipe& r, std::size_t order) {
  if (order == 0) throw StructuralError("recipe evaluation order must be >= 1");
  return std::visit(Evaluator{order}, r.node);
}

Recipe recipe_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw StructuralError("recipe must be a JSON object: " + j.dump());
  if (j.contains("eta")) {
    EtaQuotientSpec spec;
    for (const auto& f : j.at("eta")) {
      if (!f.is_array() || f.size() != 2) throw StructuralError("eta factor must be [j, e]: " + f.dump());
      spec.factors.push_back({f[0].get<std::int64_t>(), f[1].get<std::int64_t>()});
    }
    spec.q_shift = size_field(j, "shift", 0);
    Integer coef = j.contains("coef") ? integer_from_json(j.at("coef")) : Integer(1);
    return recipe::eta(std::move(spec), std::move(coef));
  }
  if (j.contains("sum")) {
    std::vector<Recipe> terms;
    for (const auto& t : j.at("sum")) terms.push_back(recipe_from_json(t));
    return recipe::sum(std::move(terms));
  }
  if (j.contains("product")) {
    std::vector<Recipe> factors;
    for (const auto& f : j.at("product")) factors.push_back(recipe_from_json(f));
    return recipe::product(std::move(factors));
  }
  if (j.contains("scale")) {
    return recipe::scaled(recipe_from_json(j.at("scale")), integer_from_json(child(j, "by")));
  }
  if (j.contains("section")) {
    return recipe::section(recipe_from_json(j.at("section")), size_field(j, "a", 1),
                           size_field(j, "b", 0));
  }
  if (j.contains("magnify")) {
    return recipe::magnified(recipe_from_json(j.at("magnify")), size_field(j, "m", 1),
                             size_field(j, "shift", 0));
  }
  if (j.contains("theta")) {
    const auto& t = j.at("theta");
    if (!t.is_array() || t.size() != 4) {
      throw StructuralError("theta must be [sign_a, exp_a, sign_b, exp_b]: " + t.dump());
    }
    return recipe::theta(t[0].get<int>(), t[1].get<std::int64_t>(), t[2].get<int>(),
                         t[3].get<std::int64_t>());
  }
  if (j.contains("named")) {
    auto name = j.at("named").get<std::string>();
    const auto& names = named_series_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw StructuralError("unknown named series '" + name + "'");
    }
    return recipe::named(std::move(name));
  }
  if (j.contains("zero")) return recipe::zero();
  throw StructuralError("unrecognized recipe: " + j.dump());
}

namespace {

struct JsonWriter {
  nlohmann::json operator()(const EtaTerm& t) const {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : t.quotient.factors) factors.push_back({f.dilation, f.exponent});
    nlohmann::json j = {{"eta", factors}};
    if (t.quotient.q_shift != 0) j["shift"] = t.quotient.q_shift;
    if (t.coefficient != 1) j["coef"] = t.coefficient.get_str();
    return j;
  }
  nlohmann::json operator()(const SumOf& s) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : s.terms) arr.push_back(to_json(t));
    return {{"sum", arr}};
  }
  nlohmann::json operator()(const ProductOf& p) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : p.factors) arr.push_back(to_json(f));
    return {{"product", arr}};
  }
  nlohmann::json operator()(const Scaled& s) const {
    return {{"scale", to_json(*s.source)}, {"by", s.factor.get_str()}};
  }
  nlohmann::json operator()(const Section& s) const {
    return {{"section", to_json(*s.source)}, {"a", s.a}, {"b", s.b}};
  }
  nlohmann::json operator()(const Magnified& m) const {
    return {{"magnify", to_json(*m.source)}, {"m", m.m}, {"shift", m.shift}};
  }
  nlohmann::json operator()(const ThetaTerm& t) const {
    return {{"theta", {t.sign_a, t.exp_a, t.sign_b, t.exp_b}}};
  }
  nlohmann::json operator()(const NamedSeries& n) const { return {{"named", n.name}}; }
  nlohmann::json operator()(const ZeroSeries&) const { return {{"zero", true}}; }
};

}  // namespace

nlohmann::json to_json(const Recipe& r) { return std::visit(JsonWriter{}, r.node); }

}  // namespace pod2
