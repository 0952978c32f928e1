#include "palettefis/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "palettefis/csv.hpp"
#include "palettefis/errors.hpp"

namespace palettefis {

namespace {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (text.rfind("\xEF\xBB\xBF", 0) == 0) text.erase(0, 3); // UTF-8 BOM
    return text;
}

std::vector<std::string> expected_header() {
    std::vector<std::string> cells;
    std::string cell;
    for (const char* p = kDatasetHeader;; ++p) {
        if (*p == ',' || *p == '\0') {
            cells.push_back(cell);
            cell.clear();
            if (*p == '\0') break;
        } else {
            cell.push_back(*p);
        }
    }
    return cells;
}

WebsiteRecord row_to_record(const CsvRow& row) {
    if (row.cells.size() != 8)
        throw ParseError("expected 8 columns, got " +
                         std::to_string(row.cells.size()));
    WebsiteRecord rec;
    const std::string& id_text = row.cells[0];
    char* end = nullptr;
    rec.id = std::strtol(id_text.c_str(), &end, 10);
    if (end == id_text.c_str() || *end != '\0')
        throw ParseError("bad Website ID '" + id_text + "'");
    rec.name = row.cells[1];
    rec.link = row.cells[2];
    rec.category = row.cells[3];
    for (int i = 0; i < 3; ++i) {
        rec.colors_hex[static_cast<std::size_t>(i)] =
            row.cells[static_cast<std::size_t>(4 + i)];
        rec.colors[static_cast<std::size_t>(i)] =
            parse_hex(row.cells[static_cast<std::size_t>(4 + i)]);
    }
    rec.font_family = row.cells[7];
    return rec;
}

void check_header(const std::vector<CsvRow>& rows,
                  const std::filesystem::path& path) {
    if (rows.empty())
        throw SchemaError("'" + path.string() + "' is empty; expected header: " +
                          kDatasetHeader);
    if (rows.front().cells != expected_header())
        throw SchemaError("'" + path.string() + "' has an unexpected header; " +
                          "expected: " + kDatasetHeader);
}

} // namespace

std::vector<WebsiteRecord> ingest_dataset(const std::filesystem::path& path) {
    const std::vector<CsvRow> rows = parse_csv(read_text_file(path));
    check_header(rows, path);

    std::vector<WebsiteRecord> records;
    std::set<long> seen_ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        WebsiteRecord rec;
        try {
            rec = row_to_record(rows[r]);
        } catch (const ParseError& e) {
            throw ParseError("'" + path.string() + "' line " +
                             std::to_string(rows[r].line) + ": " + e.what());
        }
        if (!seen_ids.insert(rec.id).second)
            throw SchemaError("'" + path.string() + "' line " +
                              std::to_string(rows[r].line) +
                              ": duplicate Website ID " + std::to_string(rec.id));
        records.push_back(std::move(rec));
    }
    return records;
}

Dataset ingest_dataset_lenient(const std::filesystem::path& path) {
    const std::vector<CsvRow> rows = parse_csv(read_text_file(path));
    check_header(rows, path);

    Dataset out;
    out.header = rows.front().cells;
    std::set<long> seen_ids;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        DatasetRow dr;
        dr.raw_cells = rows[r].cells;
        dr.line = rows[r].line;
        try {
            WebsiteRecord rec = row_to_record(rows[r]);
            if (!seen_ids.insert(rec.id).second)
                throw ParseError("duplicate Website ID " + std::to_string(rec.id));
            dr.record = std::move(rec);
        } catch (const Error& e) {
            dr.error = e.what();
        }
        out.rows.push_back(std::move(dr));
    }
    return out;
}

namespace {

AestheticsReport score_palette(Palette palette, std::string_view font_raw,
                               const ScoringConfig& config) {
    if (config.rules.inputs.size() != 2)
        throw RuleBaseError("scoring requires a rule base with exactly two "
                            "input variables (harmony count, font popularity)");

    AestheticsReport report;
    report.palette = std::move(palette);
    report.harmony =
        analyze_harmony(report.palette, config.sat_min, config.val_min);
    report.font_query = std::string(font_raw);
    report.font_family = normalize_font_name(font_raw);
    report.font_popularity = lookup_popularity(config.fonts, font_raw);

    const std::map<std::string, double> inputs{
        {config.rules.inputs[0].name, double(report.harmony.count)},
        {config.rules.inputs[1].name, report.font_popularity},
    };
    report.inference = infer(config.rules, inputs, config.fis_samples);
    report.score = report.inference.crisp;

    report.provenance =
        Provenance{config.kmeans.seed, config.kmeans.k,    config.max_samples,
                   config.sat_min,     config.val_min,     config.rules_id,
                   config.fonts_id};
    return report;
}

} // namespace

AestheticsReport score_website(const PixelImage& image,
                               std::string_view font_family,
                               const ScoringConfig& config) {
    Palette palette = extract_palette(image, config.kmeans.k, config.kmeans,
                                      config.max_samples);
    return score_palette(std::move(palette), font_family, config);
}

AestheticsReport score_record(const WebsiteRecord& record,
                              const ScoringConfig& config) {
    Palette palette = palette_from_colors(record.colors);
    return score_palette(std::move(palette), record.font_family, config);
}

std::vector<DistributionGroup> harmony_distribution(
    const std::vector<ScoredLabel>& labels, bool by_category) {
    std::map<std::string, std::map<HarmonyTemplate, int>> tallies;
    for (const ScoredLabel& l : labels)
        ++tallies[by_category ? l.category : "all"][l.primary];

    std::vector<DistributionGroup> groups;
    for (const auto& [name, counts] : tallies) {
        DistributionGroup g;
        g.name = name;
        for (const auto& [label, count] : counts) {
            g.total += count;
            g.rows.push_back(DistributionRow{label, count, 0.0});
        }
        for (DistributionRow& row : g.rows)
            row.percent = 100.0 * row.count / g.total;
        std::sort(g.rows.begin(), g.rows.end(),
                  [](const DistributionRow& a, const DistributionRow& b) {
                      if (a.count != b.count) return a.count > b.count;
                      return harmony_name(a.label) < harmony_name(b.label);
                  });
        groups.push_back(std::move(g));
    }
    return groups;
}

} // namespace palettefis
