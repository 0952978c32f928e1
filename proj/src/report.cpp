#include "palettefis/report.hpp"

#include <cstdio>

#include "palettefis/csv.hpp"

namespace palettefis {

std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

nlohmann::json report_to_json(const AestheticsReport& report) {
    nlohmann::json palette = nlohmann::json::array();
    for (const PaletteEntry& e : report.palette.entries)
        palette.push_back({{"hex", to_hex(e.color)},
                           {"rgb", {e.color.r, e.color.g, e.color.b}},
                           {"weight", e.weight}});

    nlohmann::json matched = nlohmann::json::array();
    for (HarmonyTemplate t : report.harmony.matched)
        matched.push_back(harmony_name(t));

    return {
        {"schema", 1},
        {"score", report.score},
        {"palette", palette},
        {"harmony",
         {{"segments", report.harmony.segments},
          {"achromatic_count", report.harmony.achromatic_count},
          {"matched", matched},
          {"count", report.harmony.count},
          {"primary", harmony_name(report.harmony.primary)}}},
        {"font",
         {{"query", report.font_query},
          {"family", report.font_family},
          {"popularity", report.font_popularity}}},
        {"inference",
         {{"rule_strengths", report.inference.rule_strengths},
          {"fired", report.inference.fired},
          {"crisp", report.inference.crisp}}},
        {"provenance",
         {{"seed", report.provenance.seed},
          {"k", report.provenance.k},
          {"max_samples", report.provenance.max_samples},
          {"sat_min", report.provenance.sat_min},
          {"val_min", report.provenance.val_min},
          {"rules", report.provenance.rules_id},
          {"fonts", report.provenance.fonts_id}}},
    };
}

std::string report_to_json_text(const AestheticsReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string report_to_text(const AestheticsReport& report) {
    std::string out;
    out += "Visual aesthetics score: " + format_fixed(report.score, 2) + "\n";

    out += "Palette:\n";
    for (const PaletteEntry& e : report.palette.entries)
        out += "  " + to_hex(e.color) + "  weight " +
               format_fixed(100.0 * e.weight, 2) + "%\n";

    out += "Harmony: count " + std::to_string(report.harmony.count) +
           ", primary " + std::string(harmony_name(report.harmony.primary)) +
           "\n";
    out += "  segments:";
    for (int s : report.harmony.segments) out += " " + std::to_string(s);
    if (report.harmony.segments.empty()) out += " (none)";
    out += "  achromatic entries: " +
           std::to_string(report.harmony.achromatic_count) + "\n";
    out += "  matched:";
    for (std::size_t i = 0; i < report.harmony.matched.size(); ++i)
        out += std::string(i ? ", " : " ") +
               std::string(harmony_name(report.harmony.matched[i]));
    if (report.harmony.matched.empty()) out += " (none)";
    out += "\n";

    out += "Font: '" + report.font_query + "' -> " + report.font_family +
           " (popularity " + format_fixed(report.font_popularity, 2) + ")\n";

    int fired = 0;
    for (double s : report.inference.rule_strengths)
        if (s > 0.0) ++fired;
    out += "Inference: " + std::to_string(fired) + "/" +
           std::to_string(report.inference.rule_strengths.size()) +
           " rules fired, crisp " + format_fixed(report.inference.crisp, 4) +
           "\n";

    const Provenance& p = report.provenance;
    out += "Provenance: seed " + std::to_string(p.seed) + ", k " +
           std::to_string(p.k) + ", max_samples " +
           std::to_string(p.max_samples) + ", sat_min " +
           format_fixed(p.sat_min, 2) + ", val_min " +
           format_fixed(p.val_min, 2) + "\n";
    out += "  rules: " + p.rules_id + "\n";
    out += "  fonts: " + p.fonts_id + "\n";
    return out;
}

std::string report_to_csv(const AestheticsReport& report) {
    std::string palette;
    for (std::size_t i = 0; i < report.palette.entries.size(); ++i)
        palette += (i ? " " : "") + to_hex(report.palette.entries[i].color);

    const std::vector<std::string> header{"Font Family",    "Font Popularity",
                                          "Primary Harmony", "Harmony Count",
                                          "Palette",         "Score"};
    const std::vector<std::string> row{
        report.font_family,
        format_fixed(report.font_popularity, 2),
        std::string(harmony_name(report.harmony.primary)),
        std::to_string(report.harmony.count),
        palette,
        format_fixed(report.score, 4)};
    return csv_join(header) + "\n" + csv_join(row) + "\n";
}

} // namespace palettefis
