#pragma once
#include <span>
#include <vector>

#include "palettefis/clustering.hpp"
#include "palettefis/color.hpp"
#include "palettefis/image.hpp"

namespace palettefis {

struct PaletteEntry {
    RgbColor color;
    double weight = 0.0; // fraction of sampled pixels, weights sum to 1
    bool operator==(const PaletteEntry&) const = default;
};

// Dominant colors ordered by weight descending, ties by (r, g, b) ascending.
struct Palette {
    std::vector<PaletteEntry> entries;
};

inline constexpr int kDefaultMaxSamples = 100000;

// Pixels that survive transparency filtering, as RGB points in [0, 255]^3.
// Alpha 0 pixels are skipped; partial alpha is composited over white. When
// more than max_samples pixels remain, every (count/max_samples)-th one is
// taken by integer stride so the choice is deterministic: the i-th sample is
// the pixel at filtered index i * count / max_samples. Throws EmptyImage
// when nothing survives, InvalidInput for max_samples < 1.
std::vector<Point3> sample_pixels(const PixelImage& image,
                                  int max_samples = kDefaultMaxSamples);

// k-means palette of the sampled pixels. k is clamped to the number of
// distinct sampled colors (a solid image yields a single entry no matter
// what k was requested). config.k is ignored in favor of the k argument.
Palette extract_palette(const PixelImage& image, int k,
                        const KMeansConfig& config = {},
                        int max_samples = kDefaultMaxSamples);

// Palette from explicit colors with equal weights; exact duplicates are
// merged (weights summed). Used when a dataset row already names the colors.
Palette palette_from_colors(std::span<const RgbColor> colors);

} // namespace palettefis
