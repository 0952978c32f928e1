#pragma once
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace palettefis {

// Static popularity snapshot: canonical font name -> score in [0, 100].
struct FontPopularityTable {
    std::map<std::string, double> entries;
    double default_score = 5.0; // returned for fonts not in the table
};

// Lowercased, trimmed, inner whitespace collapsed. No family splitting.
std::string canonical_font_key(std::string_view name);

// First family of a CSS-style font-family list, unquoted and canonicalized:
//   '"Helvetica Neue", Arial, sans-serif' -> "helvetica neue"
// Throws EmptyFontName when nothing is left.
std::string normalize_font_name(std::string_view raw);

// Popularity of the first family in `raw`; table default when unknown.
double lookup_popularity(const FontPopularityTable& table, std::string_view raw);

// Two-column text format: name<TAB>score, '#' comment lines, scores in
// [0, 100]. Later duplicates win. Throws ParseError with origin:line.
FontPopularityTable parse_font_table(std::string_view text,
                                     std::string_view origin);

FontPopularityTable load_font_table(const std::filesystem::path& path);

// The built-in table (embedded copy of data/font_popularity.tsv).
const FontPopularityTable& default_font_table();
std::string_view default_fonts_text();

} // namespace palettefis
