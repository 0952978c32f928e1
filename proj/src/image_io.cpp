#include "palettefis/image.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>

#include <jpeglib.h>
#include <png.h>

#include "palettefis/errors.hpp"

namespace palettefis {

PixelImage make_image(int width, int height, std::uint8_t r, std::uint8_t g,
                      std::uint8_t b, std::uint8_t a) {
    if (width < 1 || height < 1)
        throw InvalidInput("make_image: dimensions must be positive");
    PixelImage img;
    img.width = width;
    img.height = height;
    img.rgba.resize(img.pixel_count() * 4);
    for (std::size_t i = 0; i < img.pixel_count(); ++i) {
        std::uint8_t* p = img.rgba.data() + i * 4;
        p[0] = r;
        p[1] = g;
        p[2] = b;
        p[3] = a;
    }
    return img;
}

namespace {

PixelImage load_png(const std::filesystem::path& path) {
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.string().c_str()))
        throw DecodeError("PNG decode failed for '" + path.string() +
                          "': " + png.message);
    png.format = PNG_FORMAT_RGBA;
    PixelImage img;
    img.width = static_cast<int>(png.width);
    img.height = static_cast<int>(png.height);
    img.rgba.resize(PNG_IMAGE_SIZE(png));
    if (!png_image_finish_read(&png, nullptr, img.rgba.data(), 0, nullptr)) {
        std::string msg = png.message;
        png_image_free(&png);
        throw DecodeError("PNG decode failed for '" + path.string() + "': " + msg);
    }
    return img;
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
    char message[JMSG_LENGTH_MAX];
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    (*cinfo->err->format_message)(cinfo, err->message);
    std::longjmp(err->jump, 1);
}

PixelImage load_jpeg(const std::filesystem::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "rb");
    if (!fp) throw IoError("cannot open '" + path.string() + "'");

    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = &jpeg_error_exit;
    PixelImage img;

    if (setjmp(jerr.jump)) {
        jpeg_destroy_decompress(&cinfo);
        std::fclose(fp);
        throw DecodeError("JPEG decode failed for '" + path.string() +
                          "': " + jerr.message);
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, fp);
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    img.width = static_cast<int>(cinfo.output_width);
    img.height = static_cast<int>(cinfo.output_height);
    img.rgba.resize(img.pixel_count() * 4);
    std::vector<std::uint8_t> row(static_cast<std::size_t>(img.width) * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        const std::size_t y = cinfo.output_scanline;
        std::uint8_t* rowptr = row.data();
        jpeg_read_scanlines(&cinfo, &rowptr, 1);
        std::uint8_t* dst =
            img.rgba.data() + y * static_cast<std::size_t>(img.width) * 4;
        for (int x = 0; x < img.width; ++x) {
            dst[x * 4 + 0] = row[static_cast<std::size_t>(x) * 3 + 0];
            dst[x * 4 + 1] = row[static_cast<std::size_t>(x) * 3 + 1];
            dst[x * 4 + 2] = row[static_cast<std::size_t>(x) * 3 + 2];
            dst[x * 4 + 3] = 255;
        }
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    std::fclose(fp);
    return img;
}

} // namespace

PixelImage load_image(const std::filesystem::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "rb");
    if (!fp) throw IoError("cannot open '" + path.string() + "'");
    unsigned char magic[4] = {0, 0, 0, 0};
    const std::size_t got = std::fread(magic, 1, sizeof magic, fp);
    std::fclose(fp);

    static const unsigned char png_sig[4] = {0x89, 'P', 'N', 'G'};
    if (got >= 4 && std::memcmp(magic, png_sig, 4) == 0) return load_png(path);
    if (got >= 3 && magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF)
        return load_jpeg(path);
    throw DecodeError("'" + path.string() + "' is neither PNG nor JPEG");
}

void save_png(const PixelImage& image, const std::filesystem::path& path) {
    png_image png;
    std::memset(&png, 0, sizeof png);
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width);
    png.height = static_cast<png_uint_32>(image.height);
    png.format = PNG_FORMAT_RGBA;
    if (!png_image_write_to_file(&png, path.string().c_str(), 0,
                                 image.rgba.data(), 0, nullptr))
        throw IoError("cannot write PNG '" + path.string() + "': " + png.message);
}

} // namespace palettefis
