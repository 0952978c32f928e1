#pragma once
#include <cstdint>
#include <filesystem>
#include <vector>

namespace palettefis {

// Decoded raster: 8-bit RGBA, row-major, no padding.
struct PixelImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgba; // width * height * 4 bytes

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
    const std::uint8_t* pixel(std::size_t i) const { return rgba.data() + i * 4; }
    void set_pixel(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b,
                   std::uint8_t a = 255) {
        std::uint8_t* p =
            rgba.data() + (static_cast<std::size_t>(y) * width + x) * 4;
        p[0] = r;
        p[1] = g;
        p[2] = b;
        p[3] = a;
    }
};

PixelImage make_image(int width, int height, std::uint8_t r = 0,
                      std::uint8_t g = 0, std::uint8_t b = 0,
                      std::uint8_t a = 255);

// Sniffs PNG vs JPEG from the file's magic bytes. Throws IoError when the
// file cannot be read, DecodeError when the bytes are not a valid image.
PixelImage load_image(const std::filesystem::path& path);

// PNG writer (test fixtures, debugging). Throws IoError.
void save_png(const PixelImage& image, const std::filesystem::path& path);

} // namespace palettefis
