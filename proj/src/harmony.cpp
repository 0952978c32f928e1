#include "palettefis/harmony.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "palettefis/errors.hpp"

namespace palettefis {

namespace {

constexpr std::array<std::pair<HarmonyTemplate, std::string_view>, 8> kNames{{
    {HarmonyTemplate::Monochromatic, "Monochromatic"},
    {HarmonyTemplate::Analogous, "Analogous"},
    {HarmonyTemplate::Complementary, "Complementary"},
    {HarmonyTemplate::SplitComplementary, "Split Complementary"},
    {HarmonyTemplate::Triad, "Triad"},
    {HarmonyTemplate::Square, "Square"},
    {HarmonyTemplate::Rectangular, "Rectangular"},
    {HarmonyTemplate::Other, "Other"},
}};

// Sorted distinct segments; rejects values outside [0, 12).
std::vector<int> normalize(std::span<const int> segments) {
    std::vector<int> out(segments.begin(), segments.end());
    for (int s : out)
        if (s < 0 || s >= kWheelSegments)
            throw InvalidInput("segment index " + std::to_string(s) +
                               " outside the 12-segment wheel");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Circular gaps of a sorted distinct segment list (sum is always 12).
std::vector<int> circular_gaps(const std::vector<int>& segs) {
    std::vector<int> gaps(segs.size());
    for (std::size_t i = 0; i + 1 < segs.size(); ++i)
        gaps[i] = segs[i + 1] - segs[i];
    gaps.back() = segs.front() + kWheelSegments - segs.back();
    return gaps;
}

} // namespace

std::string_view harmony_name(HarmonyTemplate t) {
    for (const auto& [tpl, name] : kNames)
        if (tpl == t) return name;
    return "Other";
}

std::optional<HarmonyTemplate> harmony_from_name(std::string_view name) {
    for (const auto& [tpl, n] : kNames)
        if (n == name) return tpl;
    return std::nullopt;
}

int harmony_specificity(HarmonyTemplate t) {
    switch (t) {
        case HarmonyTemplate::Square: return 7;
        case HarmonyTemplate::Rectangular: return 6;
        case HarmonyTemplate::Triad: return 5;
        case HarmonyTemplate::SplitComplementary: return 4;
        case HarmonyTemplate::Complementary: return 3;
        case HarmonyTemplate::Analogous: return 2;
        case HarmonyTemplate::Monochromatic: return 1;
        case HarmonyTemplate::Other: return 0;
    }
    return 0;
}

SegmentScan segment_set(const Palette& palette, double sat_min, double val_min) {
    SegmentScan scan;
    std::vector<int> segs;
    for (const PaletteEntry& e : palette.entries) {
        const WheelPosition wp = wheel_position(rgb_to_hsv(e.color), sat_min, val_min);
        if (wp.chromatic)
            segs.push_back(wp.segment);
        else
            ++scan.achromatic_count;
    }
    scan.segments = normalize(segs);
    return scan;
}

bool match_template(std::span<const int> segments, HarmonyTemplate t) {
    const std::vector<int> segs = normalize(segments);
    const std::size_t m = segs.size();
    if (m == 0) return false;
    if (t == HarmonyTemplate::Monochromatic) return m == 1;
    if (m < 2) return false;

    const std::vector<int> gaps = circular_gaps(segs);
    auto sorted_gaps = gaps;
    std::sort(sorted_gaps.begin(), sorted_gaps.end());

    switch (t) {
        case HarmonyTemplate::Analogous: {
            // A contiguous arc of 2-3 segments: all gaps 1 except the wrap.
            if (m != 2 && m != 3) return false;
            for (std::size_t i = 0; i + 1 < m; ++i)
                if (sorted_gaps[i] != 1) return false;
            return true;
        }
        case HarmonyTemplate::Complementary:
            return m == 2 && gaps[0] == 6;
        case HarmonyTemplate::SplitComplementary:
            return m == 3 && sorted_gaps[0] == 2 && sorted_gaps[1] == 5 &&
                   sorted_gaps[2] == 5;
        case HarmonyTemplate::Triad:
            return m == 3 && gaps[0] == 4 && gaps[1] == 4 && gaps[2] == 4;
        case HarmonyTemplate::Square:
            return m == 4 && gaps[0] == 3 && gaps[1] == 3 && gaps[2] == 3 &&
                   gaps[3] == 3;
        case HarmonyTemplate::Rectangular:
            // Two complementary pairs: alternating gaps (t, 6-t), not a square.
            return m == 4 && gaps[0] == gaps[2] && gaps[1] == gaps[3] &&
                   gaps[0] + gaps[1] == 6 && gaps[0] != gaps[1];
        default:
            return false;
    }
}

HarmonyAnalysis analyze_segments(std::span<const int> segments,
                                 int achromatic_count) {
    HarmonyAnalysis out;
    out.segments = normalize(segments);
    out.achromatic_count = achromatic_count;

    if (out.segments.empty()) {
        if (achromatic_count > 0) {
            out.matched = {HarmonyTemplate::Monochromatic};
            out.count = 1;
            out.primary = HarmonyTemplate::Monochromatic;
        }
        return out;
    }

    std::vector<HarmonyTemplate> matched;
    if (out.segments.size() == 1)
        matched.push_back(HarmonyTemplate::Monochromatic);

    static constexpr std::array<HarmonyTemplate, 6> kSubsetTemplates{
        HarmonyTemplate::Analogous,        HarmonyTemplate::Complementary,
        HarmonyTemplate::SplitComplementary, HarmonyTemplate::Triad,
        HarmonyTemplate::Square,           HarmonyTemplate::Rectangular,
    };

    // A template counts when the full set or any subset of its arity
    // realizes it; with at most 12 segments brute force is instant.
    const std::size_t m = out.segments.size();
    for (HarmonyTemplate t : kSubsetTemplates) {
        bool hit = false;
        for (unsigned mask = 1; mask < (1u << m) && !hit; ++mask) {
            if (std::popcount(mask) < 2) continue;
            std::vector<int> subset;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) subset.push_back(out.segments[i]);
            hit = match_template(subset, t);
        }
        if (hit) matched.push_back(t);
    }

    std::sort(matched.begin(), matched.end(),
              [](HarmonyTemplate a, HarmonyTemplate b) {
                  return harmony_specificity(a) > harmony_specificity(b);
              });
    out.matched = std::move(matched);
    out.count = static_cast<int>(out.matched.size());
    out.primary = out.matched.empty() ? HarmonyTemplate::Other : out.matched.front();
    return out;
}

HarmonyAnalysis analyze_harmony(const Palette& palette, double sat_min,
                                double val_min) {
    const SegmentScan scan = segment_set(palette, sat_min, val_min);
    return analyze_segments(scan.segments, scan.achromatic_count);
}

} // namespace palettefis
