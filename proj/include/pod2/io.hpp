#pragma once

// Serialization of series and coefficient tables.  Coefficients are written
// as decimal strings in JSON because they outgrow every native integer type.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "pod2/series.hpp"

namespace pod2 {

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_format(const std::string& name);

/// {"order": N, "coeffs": ["c0", "c1", ...]}
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

/// Decimal strings, one per index.
nlohmann::json table_to_json(std::span<const Integer> values);

/// Rows `n,value` under the header `n,value`, starting at index `first`.
void write_table_csv(std::ostream& out, std::span<const Integer> values, std::size_t first = 0);
/// Right-aligned two-column listing.
void write_table_text(std::ostream& out, std::span<const Integer> values, std::size_t first = 0,
                      const std::string& label = "value");

}  // namespace pod2
