// palette-fis: score website visual aesthetics from a screenshot palette and
// font popularity, batch-score datasets, and tally harmony distributions.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palettefis/csv.hpp"
#include "palettefis/errors.hpp"
#include "palettefis/pipeline.hpp"
#include "palettefis/report.hpp"
#include "palettefis/svg.hpp"

namespace pf = palettefis;

namespace {

struct Options {
    int k = 3;
    std::uint64_t seed = 42;
    int max_samples = pf::kDefaultMaxSamples;
    double sat_min = pf::kDefaultSatMin;
    double val_min = pf::kDefaultValMin;
    std::string rules_path;
    std::string fonts_path;
    std::string format; // per-subcommand default applied later
};

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// PALETTE_FIS_CONFIG names a key=value file applied as defaults before the
// command line is parsed; explicit flags always win.
void apply_env_config(Options& opts) {
    const char* path = std::getenv("PALETTE_FIS_CONFIG");
    if (!path || !*path) return;
    std::ifstream in(path);
    if (!in)
        throw pf::ConfigError(std::string("cannot open config file '") + path +
                              "' (PALETTE_FIS_CONFIG)");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fail = [&](const std::string& what) -> void {
            throw pf::ConfigError(std::string(path) + ":" +
                                  std::to_string(line_no) + ": " + what);
        };
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) fail("expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (value.empty()) fail("empty value for '" + key + "'");

        auto to_num = [&](double lo, double hi) {
            char* end = nullptr;
            const double v = std::strtod(value.c_str(), &end);
            if (end == value.c_str() || *end != '\0')
                fail("bad number '" + value + "' for '" + key + "'");
            if (v < lo || v > hi)
                fail("'" + key + "' out of range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
            return v;
        };

        if (key == "k")
            opts.k = static_cast<int>(to_num(1, 64));
        else if (key == "seed")
            opts.seed = static_cast<std::uint64_t>(to_num(0, 1.8e19));
        else if (key == "max_samples")
            opts.max_samples = static_cast<int>(to_num(1, 2e9));
        else if (key == "sat_min")
            opts.sat_min = to_num(0, 1);
        else if (key == "val_min")
            opts.val_min = to_num(0, 1);
        else if (key == "rules")
            opts.rules_path = value;
        else if (key == "fonts")
            opts.fonts_path = value;
        else if (key == "format")
            opts.format = value;
        else
            fail("unknown key '" + key + "'");
    }
}

pf::ScoringConfig build_config(const Options& opts) {
    if (opts.k < 1) throw pf::ConfigError("--k must be at least 1");
    if (opts.max_samples < 1)
        throw pf::ConfigError("--max-samples must be at least 1");
    if (opts.sat_min < 0.0 || opts.sat_min > 1.0)
        throw pf::ConfigError("--sat-min must lie in [0, 1]");
    if (opts.val_min < 0.0 || opts.val_min > 1.0)
        throw pf::ConfigError("--val-min must lie in [0, 1]");

    pf::ScoringConfig cfg;
    cfg.kmeans.k = opts.k;
    cfg.kmeans.seed = opts.seed;
    cfg.max_samples = opts.max_samples;
    cfg.sat_min = opts.sat_min;
    cfg.val_min = opts.val_min;
    if (!opts.rules_path.empty()) {
        try {
            cfg.rules = pf::load_rulebase(opts.rules_path);
        } catch (const pf::Error& e) {
            throw pf::ConfigError(std::string("--rules: ") + e.what());
        }
        cfg.rules_id = "file:" + opts.rules_path;
    }
    if (!opts.fonts_path.empty()) {
        try {
            cfg.fonts = pf::load_font_table(opts.fonts_path);
        } catch (const pf::Error& e) {
            throw pf::ConfigError(std::string("--fonts: ") + e.what());
        }
        cfg.fonts_id = "file:" + opts.fonts_path;
    }
    return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw pf::IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw pf::IoError("short write to '" + path.string() + "'");
}

int cmd_analyze(const std::string& image_path, const std::string& font,
                const Options& opts, const std::string& svg_dir) {
    const std::string format = opts.format.empty() ? "text" : opts.format;
    if (format != "text" && format != "json" && format != "csv")
        throw pf::ConfigError("--format must be text, json or csv");
    const pf::ScoringConfig cfg = build_config(opts);

    const pf::PixelImage image = pf::load_image(image_path);
    const pf::AestheticsReport report = pf::score_website(image, font, cfg);

    if (format == "json")
        std::cout << pf::report_to_json_text(report);
    else if (format == "csv")
        std::cout << pf::report_to_csv(report);
    else
        std::cout << pf::report_to_text(report);

    if (!svg_dir.empty()) {
        std::filesystem::create_directories(svg_dir);
        const std::map<std::string, double> inputs{
            {cfg.rules.inputs[0].name, double(report.harmony.count)},
            {cfg.rules.inputs[1].name, report.font_popularity}};
        write_file(std::filesystem::path(svg_dir) / "palette.svg",
                   pf::palette_svg(report.palette));
        write_file(std::filesystem::path(svg_dir) / "inference.svg",
                   pf::inference_svg(cfg.rules, inputs, report.inference));
    }
    return 0;
}

int cmd_batch(const std::string& dataset_path, bool strict,
              const Options& opts) {
    const pf::ScoringConfig cfg = build_config(opts);
    const pf::Dataset dataset = pf::ingest_dataset_lenient(dataset_path);

    std::vector<std::string> header = dataset.header;
    header.insert(header.end(), {"Primary Harmony", "Harmony Count",
                                 "Font Popularity", "Score"});
    std::cout << pf::csv_join(header) << "\n";

    int failed = 0;
    for (const pf::DatasetRow& row : dataset.rows) {
        std::string error = row.error;
        if (error.empty()) {
            try {
                const pf::AestheticsReport report =
                    pf::score_record(*row.record, cfg);
                std::vector<std::string> cells = row.raw_cells;
                cells.push_back(
                    std::string(pf::harmony_name(report.harmony.primary)));
                cells.push_back(std::to_string(report.harmony.count));
                cells.push_back(pf::format_fixed(report.font_popularity, 2));
                cells.push_back(pf::format_fixed(report.score, 4));
                std::cout << pf::csv_join(cells) << "\n";
                continue;
            } catch (const pf::Error& e) {
                error = e.what();
            }
        }
        ++failed;
        std::cerr << dataset_path << " line " << row.line << ": " << error
                  << (strict ? " (aborting, --strict)" : " (row skipped)")
                  << "\n";
        if (strict) return 1;
    }
    return failed > 0 ? 1 : 0;
}

int cmd_distribution(const std::string& scored_path, bool by_category,
                     const Options& opts) {
    const std::string format = opts.format.empty() ? "text" : opts.format;
    if (format != "text" && format != "csv")
        throw pf::ConfigError("--format must be text or csv");

    std::ifstream in(scored_path, std::ios::binary);
    if (!in) throw pf::IoError("cannot open '" + scored_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    const std::vector<pf::CsvRow> rows = pf::parse_csv(text);
    if (rows.empty())
        throw pf::SchemaError("'" + scored_path + "' is empty");

    const std::vector<std::string>& header = rows.front().cells;
    auto column = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw pf::SchemaError("'" + scored_path + "' has no '" + name +
                              "' column");
    };
    const std::size_t harmony_col = column("Primary Harmony");
    const std::size_t category_col =
        by_category ? column("Website Category") : 0;

    std::vector<pf::ScoredLabel> labels;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const pf::CsvRow& row = rows[r];
        if (row.cells.size() <= harmony_col ||
            (by_category && row.cells.size() <= category_col))
            throw pf::SchemaError("'" + scored_path + "' line " +
                                  std::to_string(row.line) + ": too few columns");
        const std::string& label_text = row.cells[harmony_col];
        const auto label = pf::harmony_from_name(label_text);
        if (!label)
            throw pf::SchemaError("'" + scored_path + "' line " +
                                  std::to_string(row.line) +
                                  ": unknown harmony label '" + label_text + "'");
        labels.push_back(pf::ScoredLabel{
            by_category ? row.cells[category_col] : std::string(), *label});
    }

    const auto groups = pf::harmony_distribution(labels, by_category);
    if (format == "csv") {
        std::cout << "Group,Label,Count,Percent\n";
        for (const pf::DistributionGroup& g : groups)
            for (const pf::DistributionRow& row : g.rows)
                std::cout << pf::csv_join({g.name,
                                           std::string(pf::harmony_name(row.label)),
                                           std::to_string(row.count),
                                           pf::format_fixed(row.percent, 2)})
                          << "\n";
    } else {
        for (const pf::DistributionGroup& g : groups) {
            std::cout << g.name << " (" << g.total
                      << (g.total == 1 ? " site)" : " sites)") << "\n";
            for (const pf::DistributionRow& row : g.rows) {
                char line[96];
                std::snprintf(line, sizeof line, "  %-19s %5d  %6.1f%%\n",
                              std::string(pf::harmony_name(row.label)).c_str(),
                              row.count, row.percent);
                std::cout << line;
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Visual aesthetics scoring from color harmony and font "
                 "popularity"};
    app.require_subcommand(1);

    Options opts;
    try {
        apply_env_config(opts);
    } catch (const pf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string image_path, font, svg_dir, dataset_path, scored_path;
    bool strict = false, by_category = false;

    CLI::App* analyze =
        app.add_subcommand("analyze", "Score one screenshot (PNG or JPEG)");
    analyze->add_option("image", image_path, "Screenshot file")->required();
    analyze->add_option("--font", font, "Font-family of the site (CSS stack ok)")
        ->required();
    analyze->add_option("--k", opts.k, "Palette size for k-means");
    analyze->add_option("--seed", opts.seed, "PRNG seed");
    analyze->add_option("--max-samples", opts.max_samples,
                        "Pixel sample budget");
    analyze->add_option("--sat-min", opts.sat_min,
                        "Achromatic saturation threshold");
    analyze->add_option("--val-min", opts.val_min,
                        "Achromatic value threshold");
    analyze->add_option("--rules", opts.rules_path, "Rule base file");
    analyze->add_option("--fonts", opts.fonts_path, "Font popularity file");
    analyze->add_option("--format", opts.format, "text, json or csv");
    analyze->add_option("--svg-dir", svg_dir,
                        "Write palette.svg and inference.svg here");

    CLI::App* batch = app.add_subcommand(
        "batch", "Score a dataset CSV; appends harmony/popularity/score "
                 "columns to stdout");
    batch->add_option("dataset", dataset_path, "Dataset CSV")->required();
    batch->add_flag("--strict", strict, "Abort on the first bad row");
    batch->add_option("--sat-min", opts.sat_min,
                      "Achromatic saturation threshold");
    batch->add_option("--val-min", opts.val_min, "Achromatic value threshold");
    batch->add_option("--rules", opts.rules_path, "Rule base file");
    batch->add_option("--fonts", opts.fonts_path, "Font popularity file");

    CLI::App* distribution = app.add_subcommand(
        "distribution", "Tally primary harmony labels of a scored CSV");
    distribution->add_option("scored", scored_path, "Output of 'batch'")
        ->required();
    distribution->add_flag("--by-category", by_category,
                           "Group by Website Category");
    distribution->add_option("--format", opts.format, "text or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // bad flags are configuration errors
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(image_path, font, opts, svg_dir);
        if (batch->parsed()) return cmd_batch(dataset_path, strict, opts);
        return cmd_distribution(scored_path, by_category, opts);
    } catch (const pf::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
