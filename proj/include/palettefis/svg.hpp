#pragma once
#include <map>
#include <string>

#include "palettefis/fuzzy.hpp"
#include "palettefis/palette.hpp"

namespace palettefis {

// Self-contained SVG documents with deterministic bytes (fixed-precision
// coordinates, no timestamps), so repeated runs diff clean.

// Horizontal swatch strip, widths proportional to entry weights.
std::string palette_svg(const Palette& palette);

// One panel per variable: input panels show the term curves and a marker at
// the crisp input; the output panel adds the clipped aggregate (shaded) and
// the centroid line. `inputs` uses the same keys as infer().
std::string inference_svg(const RuleBase& rulebase,
                          const std::map<std::string, double>& inputs,
                          const InferenceResult& result);

} // namespace palettefis
