#pragma once
#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "palettefis/fonts.hpp"
#include "palettefis/fuzzy.hpp"
#include "palettefis/harmony.hpp"
#include "palettefis/image.hpp"
#include "palettefis/palette.hpp"
#include "palettefis/rulebase_io.hpp"

namespace palettefis {

// One dataset row: id, descriptive fields, three dominant colors, font stack.
struct WebsiteRecord {
    long id = 0;
    std::string name;
    std::string link;
    std::string category;
    std::array<std::string, 3> colors_hex;
    std::array<RgbColor, 3> colors;
    std::string font_family;
};

inline constexpr const char* kDatasetHeader =
    "Website ID,Website Name,Website Link,Website Category,"
    "First color,Second color,Third color,Font-Family";

// Strict ingestion: throws SchemaError on a bad header or duplicate id,
// ParseError (with row context) on the first malformed row.
std::vector<WebsiteRecord> ingest_dataset(const std::filesystem::path& path);

// Lenient ingestion for batch mode: bad rows come back as diagnostics
// instead of exceptions. The header is still mandatory (SchemaError).
struct DatasetRow {
    std::optional<WebsiteRecord> record; // empty when the row failed
    std::vector<std::string> raw_cells;
    int line = 0;       // 1-based CSV line
    std::string error;  // set when the row failed
};
struct Dataset {
    std::vector<std::string> header;
    std::vector<DatasetRow> rows;
};
Dataset ingest_dataset_lenient(const std::filesystem::path& path);

// Everything score_website / score_record needs, with library defaults.
struct ScoringConfig {
    KMeansConfig kmeans;                 // k, seed, tolerance, iterations
    int max_samples = kDefaultMaxSamples;
    double sat_min = kDefaultSatMin;
    double val_min = kDefaultValMin;
    int fis_samples = kDefaultFisSamples;
    RuleBase rules = default_rulebase();
    FontPopularityTable fonts = default_font_table();
    // Identity strings recorded in report provenance.
    std::string rules_id = "builtin:aesthetics-v1";
    std::string fonts_id = "builtin:fonts-v1";
};

struct Provenance {
    std::uint64_t seed = 0;
    int k = 0;
    int max_samples = 0;
    double sat_min = 0.0;
    double val_min = 0.0;
    std::string rules_id;
    std::string fonts_id;
};

struct AestheticsReport {
    Palette palette;
    HarmonyAnalysis harmony;
    std::string font_query;   // font string as given
    std::string font_family;  // normalized first family
    double font_popularity = 0.0;
    InferenceResult inference;
    double score = 0.0;
    Provenance provenance;
};

// Screenshot + font-family -> full report. The rule base's first declared
// input variable receives the harmony count, the second the font popularity.
AestheticsReport score_website(const PixelImage& image,
                               std::string_view font_family,
                               const ScoringConfig& config = {});

// Same scoring for a dataset row whose three colors are already known;
// the palette is the given colors with equal weights (duplicates merged).
AestheticsReport score_record(const WebsiteRecord& record,
                              const ScoringConfig& config = {});

// Harmony label tallies for scored rows, overall or grouped by category.
struct ScoredLabel {
    std::string category;
    HarmonyTemplate primary = HarmonyTemplate::Other;
};
struct DistributionRow {
    HarmonyTemplate label = HarmonyTemplate::Other;
    int count = 0;
    double percent = 0.0; // of the group total
};
struct DistributionGroup {
    std::string name; // category, or "all" when not grouping
    int total = 0;
    std::vector<DistributionRow> rows; // count desc, ties by name asc
};
std::vector<DistributionGroup> harmony_distribution(
    const std::vector<ScoredLabel>& labels, bool by_category);

} // namespace palettefis
