#pragma once
#include <string>

#include <json.hpp>

#include "palettefis/pipeline.hpp"

namespace palettefis {

// Stable serializations of a report. All three are deterministic: the same
// report produces the same bytes on every run and platform.

// Machine-readable form, schema version 1. Keys are emitted sorted.
nlohmann::json report_to_json(const AestheticsReport& report);
std::string report_to_json_text(const AestheticsReport& report); // 2-space indent

// Human-readable multi-line summary.
std::string report_to_text(const AestheticsReport& report);

// Header plus one flat row (palette as space-joined hex list).
std::string report_to_csv(const AestheticsReport& report);

// Fixed-precision number formatting used across text outputs.
std::string format_fixed(double value, int decimals);

} // namespace palettefis
