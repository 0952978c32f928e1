#include "palettefis/fonts.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "palettefis/errors.hpp"

namespace palettefis {

std::string canonical_font_key(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    bool pending_space = false;
    for (char c : name) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
            if (!out.empty()) pending_space = true; // also trims leading space
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(u)));
    }
    return out;
}

std::string normalize_font_name(std::string_view raw) {
    // First family of a CSS-style stack.
    std::string_view first = raw.substr(0, raw.find(','));

    // Trim whitespace, then one layer of matching quotes, then trim again.
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    first = trim(first);
    if (first.size() >= 2 &&
        ((first.front() == '"' && first.back() == '"') ||
         (first.front() == '\'' && first.back() == '\''))) {
        first.remove_prefix(1);
        first.remove_suffix(1);
        first = trim(first);
    }

    std::string key = canonical_font_key(first);
    if (key.empty())
        throw EmptyFontName("font-family '" + std::string(raw) +
                            "' has no usable first family");
    return key;
}

double lookup_popularity(const FontPopularityTable& table, std::string_view raw) {
    const std::string key = normalize_font_name(raw);
    const auto it = table.entries.find(key);
    return it == table.entries.end() ? table.default_score : it->second;
}

FontPopularityTable parse_font_table(std::string_view text,
                                     std::string_view origin) {
    FontPopularityTable table;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto fail = [&](const std::string& what) -> void {
            throw ParseError(std::string(origin) + ":" +
                             std::to_string(line_no) + ": " + what);
        };

        // Skip blanks and comment lines.
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos)
            fail("expected name<TAB>score");
        const std::string key = canonical_font_key(line.substr(0, tab));
        if (key.empty()) fail("empty font name");

        const std::string score_text = line.substr(tab + 1);
        char* end = nullptr;
        const double score = std::strtod(score_text.c_str(), &end);
        if (end == score_text.c_str() || !std::isfinite(score))
            fail("bad score '" + score_text + "'");
        while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
        if (*end != '\0') fail("trailing junk after score");
        if (score < 0.0 || score > 100.0)
            fail("score " + score_text + " outside [0, 100]");

        table.entries[key] = score; // later duplicates win
    }
    return table;
}

FontPopularityTable load_font_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open font table '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_font_table(buf.str(), path.string());
}

} // namespace palettefis
