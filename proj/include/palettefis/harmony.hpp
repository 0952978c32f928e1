#pragma once
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "palettefis/color.hpp"
#include "palettefis/palette.hpp"

namespace palettefis {

// Classic color-wheel schemes on the 12-segment wheel, listed least to most
// specific. "Other" is the no-match fallback, never a matched template.
enum class HarmonyTemplate {
    Monochromatic,
    Analogous,
    Complementary,
    SplitComplementary,
    Triad,
    Square,
    Rectangular,
    Other,
};

// Display names ("Split Complementary" has the space).
std::string_view harmony_name(HarmonyTemplate t);
std::optional<HarmonyTemplate> harmony_from_name(std::string_view name);

// Square beats Rectangular beats Triad, etc.; higher wins the primary label.
int harmony_specificity(HarmonyTemplate t);

struct SegmentScan {
    std::vector<int> segments; // sorted, distinct, chromatic colors only
    int achromatic_count = 0;  // palette entries classified achromatic
};

SegmentScan segment_set(const Palette& palette,
                        double sat_min = kDefaultSatMin,
                        double val_min = kDefaultValMin);

// Does this exact segment set realize the template at any rotation?
// Duplicates/order in `segments` are irrelevant; Other never matches.
bool match_template(std::span<const int> segments, HarmonyTemplate t);

struct HarmonyAnalysis {
    std::vector<int> segments;
    int achromatic_count = 0;
    // Every template matched by the full set or by any subset of matching
    // arity (Monochromatic only via the full set), most specific first.
    std::vector<HarmonyTemplate> matched;
    int count = 0; // matched.size(), the "color harmony" input of the FIS
    HarmonyTemplate primary = HarmonyTemplate::Other;
};

// An all-achromatic palette counts as Monochromatic (count 1).
HarmonyAnalysis analyze_segments(std::span<const int> segments,
                                 int achromatic_count);

HarmonyAnalysis analyze_harmony(const Palette& palette,
                                double sat_min = kDefaultSatMin,
                                double val_min = kDefaultValMin);

} // namespace palettefis
