#include "pod2/io.hpp"

#include <iomanip>
#include <ostream>

#include "pod2/errors.hpp"

namespace pod2 {

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw StructuralError("unknown output format '" + name + "' (expected json, csv or text)");
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  return {{"order", s.order()}, {"coeffs", table_to_json(s.coefficients())}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
    throw StructuralError("series JSON needs 'order' and 'coeffs'");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_string()) throw StructuralError("series coefficients must be decimal strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  const auto order = j.at("order").get<long long>();
  if (order < 1) throw StructuralError("series order must be >= 1");
  return make_series(std::move(coeffs), static_cast<std::size_t>(order));
}

nlohmann::json table_to_json(std::span<const Integer> values) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

void write_table_csv(std::ostream& out, std::span<const Integer> values, std::size_t first) {
  out << "n,value\n";
  for (std::size_t n = first; n < values.size(); ++n) out << n << ',' << values[n].get_str() << '\n';
}

void write_table_text(std::ostream& out, std::span<const Integer> values, std::size_t first,
                      const std::string& label) {
  std::size_t width = label.size();
  for (std::size_t n = first; n < values.size(); ++n) width = std::max(width, values[n].get_str().size());
  const auto index_width = static_cast<int>(std::max<std::size_t>(std::to_string(values.size()).size(), 1));
  out << std::setw(index_width) << "n" << "  " << std::setw(static_cast<int>(width)) << label << '\n';
  for (std::size_t n = first; n < values.size(); ++n) {
    out << std::setw(index_width) << n << "  " << std::setw(static_cast<int>(width)) << values[n].get_str()
        << '\n';
  }
}

}  // namespace pod2
