// Built-in configuration: the data files under data/ are hex-embedded at
// build time (see cmake/hexembed.cmake) and parsed here on first use, so the
// defaults stay ordinary editable data while the binary remains standalone.

#include "palettefis/embedded_fonts.hpp"
#include "palettefis/embedded_rules.hpp"
#include "palettefis/fonts.hpp"
#include "palettefis/rulebase_io.hpp"

namespace palettefis {

std::string_view default_rules_text() {
    return {reinterpret_cast<const char*>(embedded_rules_data),
            embedded_rules_size};
}

std::string_view default_fonts_text() {
    return {reinterpret_cast<const char*>(embedded_fonts_data),
            embedded_fonts_size};
}

const RuleBase& default_rulebase() {
    static const RuleBase rb =
        parse_rulebase(default_rules_text(), "builtin:aesthetics-v1");
    return rb;
}

const FontPopularityTable& default_font_table() {
    static const FontPopularityTable table =
        parse_font_table(default_fonts_text(), "builtin:fonts-v1");
    return table;
}

} // namespace palettefis
