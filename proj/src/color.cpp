#include "palettefis/color.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "palettefis/errors.hpp"

namespace palettefis {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

} // namespace

RgbColor parse_hex(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '#') body.remove_prefix(1);
    if (body.size() != 6)
        throw ParseError("invalid hex color '" + std::string(text) +
                         "': expected 6 hex digits");
    int v[6];
    for (int i = 0; i < 6; ++i) {
        v[i] = hex_digit(body[static_cast<std::size_t>(i)]);
        if (v[i] < 0)
            throw ParseError("invalid hex color '" + std::string(text) +
                             "': bad digit '" + body[static_cast<std::size_t>(i)] + "'");
    }
    return RgbColor{v[0] * 16 + v[1], v[2] * 16 + v[3], v[4] * 16 + v[5]};
}

std::string to_hex(const RgbColor& color) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", color.r, color.g, color.b);
    return buf;
}

RgbColor clamp_rgb(int r, int g, int b) {
    auto clamp = [](int x) { return std::clamp(x, 0, 255); };
    return RgbColor{clamp(r), clamp(g), clamp(b)};
}

HsvColor rgb_to_hsv(const RgbColor& color) {
    const double r = color.r / 255.0;
    const double g = color.g / 255.0;
    const double b = color.b / 255.0;
    const double hi = std::max({r, g, b});
    const double lo = std::min({r, g, b});
    const double delta = hi - lo;

    HsvColor out;
    out.v = hi;
    if (hi <= 0.0 || delta <= 0.0) {
        // Black or pure gray: saturation 0, hue pinned to 0 by convention.
        out.s = 0.0;
        out.h = 0.0;
        return out;
    }
    out.s = delta / hi;
    double h;
    if (hi == r)
        h = 60.0 * ((g - b) / delta);
    else if (hi == g)
        h = 60.0 * (2.0 + (b - r) / delta);
    else
        h = 60.0 * (4.0 + (r - g) / delta);
    if (h < 0.0) h += 360.0;
    if (h >= 360.0) h -= 360.0; // guard against rounding at the seam
    out.h = h;
    return out;
}

WheelPosition wheel_position(const HsvColor& color, double sat_min, double val_min) {
    if (color.s < sat_min || color.v < val_min) return WheelPosition{false, 0};
    int seg = static_cast<int>(color.h / 30.0) % kWheelSegments;
    if (seg < 0) seg += kWheelSegments;
    return WheelPosition{true, seg};
}

} // namespace palettefis
