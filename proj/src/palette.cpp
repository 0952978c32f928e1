#include "palettefis/palette.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "palettefis/errors.hpp"

namespace palettefis {

namespace {

// Alpha handling shared by the counting and collecting passes: fully
// transparent pixels vanish, partial alpha is composited over white.
bool composite(const std::uint8_t* px, Point3& out) {
    const int a = px[3];
    if (a == 0) return false;
    if (a == 255) {
        out = Point3{double(px[0]), double(px[1]), double(px[2])};
        return true;
    }
    auto over_white = [a](int c) {
        return double(c * a + 255 * (255 - a)) / 255.0;
    };
    out = Point3{over_white(px[0]), over_white(px[1]), over_white(px[2])};
    return true;
}

void sort_entries(std::vector<PaletteEntry>& entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const PaletteEntry& a, const PaletteEntry& b) {
                         if (a.weight != b.weight) return a.weight > b.weight;
                         return std::tie(a.color.r, a.color.g, a.color.b) <
                                std::tie(b.color.r, b.color.g, b.color.b);
                     });
}

} // namespace

std::vector<Point3> sample_pixels(const PixelImage& image, int max_samples) {
    if (max_samples < 1) throw InvalidInput("sample_pixels: max_samples < 1");

    const std::size_t total = image.pixel_count();
    std::size_t surviving = 0;
    for (std::size_t i = 0; i < total; ++i)
        if (image.pixel(i)[3] != 0) ++surviving;
    if (surviving == 0)
        throw EmptyImage("image has no pixels left after transparency filtering");

    const std::size_t want =
        std::min(surviving, static_cast<std::size_t>(max_samples));
    std::vector<Point3> samples;
    samples.reserve(want);

    // Deterministic stride over the filtered sequence: sample s is the pixel
    // at filtered index s * surviving / want.
    std::size_t next_sample = 0;  // index into [0, want)
    std::size_t filtered = 0;     // index into the filtered sequence
    for (std::size_t i = 0; i < total && next_sample < want; ++i) {
        const std::uint8_t* px = image.pixel(i);
        if (px[3] == 0) continue;
        if (filtered == next_sample * surviving / want) {
            Point3 p;
            composite(px, p);
            samples.push_back(p);
            ++next_sample;
        }
        ++filtered;
    }
    return samples;
}

Palette extract_palette(const PixelImage& image, int k,
                        const KMeansConfig& config, int max_samples) {
    if (k < 1) throw InvalidInput("extract_palette: k < 1");
    const std::vector<Point3> samples = sample_pixels(image, max_samples);

    std::set<std::tuple<double, double, double>> distinct;
    for (const Point3& p : samples) distinct.insert({p.x, p.y, p.z});

    KMeansConfig cfg = config;
    cfg.k = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(k), distinct.size()));
    const ClusteringResult res = run_kmeans(samples, cfg);

    std::vector<std::size_t> counts(res.centroids.size(), 0);
    for (std::uint32_t a : res.assignments) ++counts[a];

    Palette palette;
    for (std::size_t c = 0; c < res.centroids.size(); ++c) {
        if (counts[c] == 0) continue;
        const Point3& ctr = res.centroids[c];
        PaletteEntry e;
        e.color = clamp_rgb(static_cast<int>(std::floor(ctr.x + 0.5)),
                            static_cast<int>(std::floor(ctr.y + 0.5)),
                            static_cast<int>(std::floor(ctr.z + 0.5)));
        e.weight = static_cast<double>(counts[c]) /
                   static_cast<double>(samples.size());
        palette.entries.push_back(e);
    }
    sort_entries(palette.entries);
    return palette;
}

Palette palette_from_colors(std::span<const RgbColor> colors) {
    if (colors.empty()) throw InvalidInput("palette_from_colors: no colors");
    std::map<std::tuple<int, int, int>, std::size_t> counts;
    for (const RgbColor& c : colors) ++counts[{c.r, c.g, c.b}];

    Palette palette;
    for (const auto& [key, count] : counts) {
        PaletteEntry e;
        e.color = RgbColor{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
        e.weight = static_cast<double>(count) / static_cast<double>(colors.size());
        palette.entries.push_back(e);
    }
    sort_entries(palette.entries);
    return palette;
}

} // namespace palettefis
