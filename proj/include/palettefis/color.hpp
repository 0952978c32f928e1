#pragma once
#include <string>
#include <string_view>

namespace palettefis {

struct RgbColor {
    int r = 0;
    int g = 0;
    int b = 0;
    bool operator==(const RgbColor&) const = default;
};

// h in [0, 360) degrees, s and v in [0, 1]. Achromatic colors carry h = 0.
struct HsvColor {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;
};

// Position on the 12-segment color wheel (30 degrees per segment), or
// "achromatic" for colors too gray/dark to carry a usable hue.
struct WheelPosition {
    bool chromatic = false;
    int segment = 0; // valid only when chromatic
};

inline constexpr int kWheelSegments = 12;
inline constexpr double kDefaultSatMin = 0.10;
inline constexpr double kDefaultValMin = 0.10;

// Accepts "#RRGGBB" or "RRGGBB", case-insensitive. Throws ParseError.
RgbColor parse_hex(std::string_view text);

// Lowercase "#rrggbb".
std::string to_hex(const RgbColor& color);

RgbColor clamp_rgb(int r, int g, int b);

HsvColor rgb_to_hsv(const RgbColor& color);

// Segment = floor(h / 30) mod 12 for chromatic colors; colors with
// s < sat_min or v < val_min are classified achromatic.
WheelPosition wheel_position(const HsvColor& color,
                             double sat_min = kDefaultSatMin,
                             double val_min = kDefaultValMin);

} // namespace palettefis
