#pragma once
// report.hpp - Rendering search reports.
//
// Four formats: an aligned text table (one row per base, the shape the
// results are usually quoted in), JSON, flat CSV, and OEIS b-file lines.
// Values that can outgrow 64 bits (hit values, terms, bounds) are always
// serialized as decimal strings in JSON.

#include "munchausen/search.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace munch {

// Three columns: base, comma-separated hit values, comma-separated
// bracketed representations. Reports are expected sorted by base, one
// per base. Annotated hits add footnote lines under the table.
std::string render_table(const std::vector<SearchReport>& reports);

// "k a(k)" per hit, k starting at 1 -- the OEIS b-file convention.
// One base per file; this artifact never guesses A166623's cross-base
// ordering.
std::string render_bfile(const SearchReport& report);

std::string render_json(const SearchReport& report);
std::string render_json(const std::vector<SearchReport>& reports);

// Inverse of the single-report render_json. Throws std::invalid_argument
// on malformed input.
SearchReport parse_report_json(std::string_view text);

// One row per hit: base, value, representation, convention.
std::string render_csv(const SearchReport& report);
std::string render_csv(const std::vector<SearchReport>& reports);

// Human-readable single-base report with per-hit term equations.
std::string render_find_text(const SearchReport& report);

// "3^3 + 4^4 + 3^3 + 5^5"
std::string term_equation(const std::vector<std::pair<std::uint8_t, Nat>>& breakdown);

}  // namespace munch
