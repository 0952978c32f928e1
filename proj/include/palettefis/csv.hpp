#pragma once
#include <string>
#include <string_view>
#include <vector>

namespace palettefis {

struct CsvRow {
    std::vector<std::string> cells;
    int line = 0; // 1-based line the row starts on, for diagnostics
};

// RFC 4180-style parser: comma separators, LF or CRLF row ends, double
// quotes with "" escapes, newlines allowed inside quoted cells. An
// unterminated quote throws ParseError. No trailing empty row for a final
// newline. Text without a final newline still yields its last row.
std::vector<CsvRow> parse_csv(std::string_view text);

// Quotes a field if it contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

// Joins escaped fields with commas (no trailing newline).
std::string csv_join(const std::vector<std::string>& cells);

} // namespace palettefis
