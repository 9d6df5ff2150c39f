#include "stegmatch/image.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "stegmatch/errors.hpp"

namespace stegmatch {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

void check_dimensions(const RgbImage& img, const std::string& what) {
    if (img.width == 0 || img.height == 0) {
        throw FormatError(what + ": zero image dimension");
    }
    const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
    if (img.channels.size() != pixels * 3) {
        throw FormatError(what + ": channel buffer size does not match dimensions");
    }
    if (!img.alpha.empty() && img.alpha.size() != pixels) {
        throw FormatError(what + ": alpha buffer size does not match dimensions");
    }
}

// ---------------------------------------------------------------------------
// PNG via libpng
// ---------------------------------------------------------------------------

struct PngErrorCtx {
    std::string message;
};

void on_png_error(png_structp png, png_const_charp msg) {
    auto* ctx = static_cast<PngErrorCtx*>(png_get_error_ptr(png));
    if (ctx != nullptr && msg != nullptr) {
        ctx->message = msg;
    }
    png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

struct PngReadHandle {
    FILE* fp = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~PngReadHandle() {
        if (png != nullptr) {
            png_destroy_read_struct(&png, &info, nullptr);
        }
        if (fp != nullptr) {
            std::fclose(fp);
        }
    }
};

struct PngWriteHandle {
    FILE* fp = nullptr;
    png_structp png = nullptr;
    png_infop info = nullptr;

    ~PngWriteHandle() {
        if (png != nullptr) {
            png_destroy_write_struct(&png, &info);
        }
        if (fp != nullptr) {
            std::fclose(fp);
        }
    }
};

RgbImage load_png(const std::filesystem::path& path) {
    PngErrorCtx err;
    PngReadHandle h;
    h.fp = std::fopen(path.string().c_str(), "rb");
    if (h.fp == nullptr) {
        throw IoError("cannot open " + path.string());
    }
    h.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &err, on_png_error,
                                   on_png_warning);
    if (h.png != nullptr) {
        h.info = png_create_info_struct(h.png);
    }
    if (h.png == nullptr || h.info == nullptr) {
        throw DecodeError("libpng initialization failed");
    }

    RgbImage img;
    std::vector<std::uint8_t> interleaved;
    std::vector<png_bytep> rows;

    if (setjmp(png_jmpbuf(h.png))) {
        throw DecodeError("cannot decode " + path.string() + ": " + err.message);
    }

    png_init_io(h.png, h.fp);
    png_read_info(h.png, h.info);

    const png_uint_32 width = png_get_image_width(h.png, h.info);
    const png_uint_32 height = png_get_image_height(h.png, h.info);
    const int bit_depth = png_get_bit_depth(h.png, h.info);
    const int color_type = png_get_color_type(h.png, h.info);

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        throw FormatError("palette PNG unsupported: " + path.string() +
                          " (embedding is defined per RGB byte triple)");
    }
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        throw FormatError("grayscale PNG unsupported: " + path.string() +
                          " (embedding is defined per RGB byte triple)");
    }
    if (bit_depth != 8) {
        throw DepthError("unsupported channel depth in " + path.string() + ": " +
                         std::to_string(bit_depth) + " bits (need 8)");
    }
    if (color_type != PNG_COLOR_TYPE_RGB && color_type != PNG_COLOR_TYPE_RGB_ALPHA) {
        throw FormatError("unsupported PNG color type " + std::to_string(color_type));
    }

    const bool has_alpha = (color_type == PNG_COLOR_TYPE_RGB_ALPHA);
    const std::size_t samples_per_pixel = has_alpha ? 4 : 3;
    const std::size_t row_bytes = static_cast<std::size_t>(width) * samples_per_pixel;
    if (png_get_rowbytes(h.png, h.info) != row_bytes) {
        throw DecodeError("unexpected PNG row size in " + path.string());
    }

    interleaved.resize(row_bytes * height);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = interleaved.data() + static_cast<std::size_t>(y) * row_bytes;
    }
    png_read_image(h.png, rows.data());
    png_read_end(h.png, nullptr);

    img.width = width;
    img.height = height;
    const std::size_t pixels = static_cast<std::size_t>(width) * height;
    img.channels.resize(pixels * 3);
    if (has_alpha) {
        img.alpha.resize(pixels);
        for (std::size_t i = 0; i < pixels; ++i) {
            img.channels[i * 3 + 0] = interleaved[i * 4 + 0];
            img.channels[i * 3 + 1] = interleaved[i * 4 + 1];
            img.channels[i * 3 + 2] = interleaved[i * 4 + 2];
            img.alpha[i] = interleaved[i * 4 + 3];
        }
    } else {
        img.channels.assign(interleaved.begin(), interleaved.end());
    }
    return img;
}

void save_png(const RgbImage& img, const std::filesystem::path& path) {
    const bool has_alpha = img.has_alpha();
    const std::size_t pixels = static_cast<std::size_t>(img.width) * img.height;
    const std::size_t samples_per_pixel = has_alpha ? 4 : 3;

    std::vector<std::uint8_t> interleaved;
    if (has_alpha) {
        interleaved.resize(pixels * 4);
        for (std::size_t i = 0; i < pixels; ++i) {
            interleaved[i * 4 + 0] = img.channels[i * 3 + 0];
            interleaved[i * 4 + 1] = img.channels[i * 3 + 1];
            interleaved[i * 4 + 2] = img.channels[i * 3 + 2];
            interleaved[i * 4 + 3] = img.alpha[i];
        }
    } else {
        interleaved = img.channels;
    }

    PngErrorCtx err;
    PngWriteHandle h;
    h.fp = std::fopen(path.string().c_str(), "wb");
    if (h.fp == nullptr) {
        throw IoError("cannot write " + path.string());
    }
    h.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &err, on_png_error,
                                    on_png_warning);
    if (h.png != nullptr) {
        h.info = png_create_info_struct(h.png);
    }
    if (h.png == nullptr || h.info == nullptr) {
        throw IoError("libpng initialization failed");
    }

    std::vector<png_bytep> rows(img.height);
    const std::size_t row_bytes = static_cast<std::size_t>(img.width) * samples_per_pixel;
    for (std::uint32_t y = 0; y < img.height; ++y) {
        rows[y] = interleaved.data() + static_cast<std::size_t>(y) * row_bytes;
    }

    if (setjmp(png_jmpbuf(h.png))) {
        throw IoError("cannot encode " + path.string() + ": " + err.message);
    }

    png_init_io(h.png, h.fp);
    png_set_IHDR(h.png, h.info, img.width, img.height, 8,
                 has_alpha ? PNG_COLOR_TYPE_RGB_ALPHA : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(h.png, h.info);
    png_write_image(h.png, rows.data());
    png_write_end(h.png, nullptr);
}

// ---------------------------------------------------------------------------
// BMP, 24-bit uncompressed (BI_RGB) only
// ---------------------------------------------------------------------------

std::uint16_t rd_u16(const std::vector<std::uint8_t>& buf, std::size_t off) {
    return static_cast<std::uint16_t>(buf[off] | (buf[off + 1] << 8));
}

std::uint32_t rd_u32(const std::vector<std::uint8_t>& buf, std::size_t off) {
    return static_cast<std::uint32_t>(buf[off]) | (static_cast<std::uint32_t>(buf[off + 1]) << 8) |
           (static_cast<std::uint32_t>(buf[off + 2]) << 16) |
           (static_cast<std::uint32_t>(buf[off + 3]) << 24);
}

std::int32_t rd_i32(const std::vector<std::uint8_t>& buf, std::size_t off) {
    return static_cast<std::int32_t>(rd_u32(buf, off));
}

void wr_u16(std::vector<std::uint8_t>& buf, std::uint16_t v) {
    buf.push_back(static_cast<std::uint8_t>(v & 0xFF));
    buf.push_back(static_cast<std::uint8_t>((v >> 8) & 0xFF));
}

void wr_u32(std::vector<std::uint8_t>& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        buf.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
    }
}

RgbImage load_bmp(const std::vector<std::uint8_t>& file, const std::string& name) {
    if (file.size() < 54) {
        throw DecodeError("truncated BMP: " + name);
    }
    const std::uint32_t data_offset = rd_u32(file, 10);
    const std::uint32_t dib_size = rd_u32(file, 14);
    // BITMAPINFOHEADER and its V4/V5 extensions share the leading fields.
    if (dib_size != 40 && dib_size != 52 && dib_size != 56 && dib_size != 108 &&
        dib_size != 124) {
        throw FormatError("unsupported BMP header variant in " + name);
    }
    const std::int32_t raw_width = rd_i32(file, 18);
    const std::int32_t raw_height = rd_i32(file, 22);
    const std::uint16_t planes = rd_u16(file, 26);
    const std::uint16_t bpp = rd_u16(file, 28);
    const std::uint32_t compression = rd_u32(file, 30);

    if (planes != 1) {
        throw DecodeError("bad BMP plane count in " + name);
    }
    if (bpp == 1 || bpp == 4 || bpp == 8) {
        throw FormatError("palette BMP unsupported: " + name +
                          " (embedding is defined per RGB byte triple)");
    }
    if (bpp == 16) {
        throw DepthError("unsupported channel depth in " + name +
                         ": 16-bit pixels (need 24-bit BMP)");
    }
    if (bpp != 24) {
        throw FormatError("only 24-bit BMP is supported, " + name + " has " +
                          std::to_string(bpp) + " bpp");
    }
    if (compression != 0) {  // BI_RGB
        throw FormatError("compressed BMP unsupported: " + name);
    }
    if (raw_width <= 0 || raw_height == 0) {
        throw DecodeError("bad BMP dimensions in " + name);
    }

    const bool top_down = raw_height < 0;
    const std::uint32_t width = static_cast<std::uint32_t>(raw_width);
    const std::uint32_t height =
        static_cast<std::uint32_t>(top_down ? -static_cast<std::int64_t>(raw_height)
                                            : raw_height);
    const std::size_t stride = (static_cast<std::size_t>(width) * 3 + 3) & ~std::size_t{3};
    if (data_offset > file.size() ||
        stride * height > file.size() - data_offset) {
        throw DecodeError("truncated BMP pixel data in " + name);
    }

    RgbImage img;
    img.width = width;
    img.height = height;
    img.channels.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::uint32_t y = 0; y < height; ++y) {
        const std::uint32_t src_row = top_down ? y : (height - 1 - y);
        const std::size_t src = data_offset + static_cast<std::size_t>(src_row) * stride;
        for (std::uint32_t x = 0; x < width; ++x) {
            const std::size_t dst = (static_cast<std::size_t>(y) * width + x) * 3;
            img.channels[dst + 0] = file[src + x * 3 + 2];  // BMP stores BGR
            img.channels[dst + 1] = file[src + x * 3 + 1];
            img.channels[dst + 2] = file[src + x * 3 + 0];
        }
    }
    return img;
}

void save_bmp(const RgbImage& img, const std::filesystem::path& path) {
    if (img.has_alpha()) {
        throw FormatError("24-bit BMP cannot carry the alpha plane of " + path.string() +
                          "; save as PNG instead");
    }
    const std::size_t stride = (static_cast<std::size_t>(img.width) * 3 + 3) & ~std::size_t{3};
    const std::size_t data_size = stride * img.height;
    const std::uint32_t file_size = static_cast<std::uint32_t>(14 + 40 + data_size);

    std::vector<std::uint8_t> out;
    out.reserve(file_size);
    out.push_back('B');
    out.push_back('M');
    wr_u32(out, file_size);
    wr_u16(out, 0);
    wr_u16(out, 0);
    wr_u32(out, 14 + 40);  // pixel data offset
    wr_u32(out, 40);       // BITMAPINFOHEADER
    wr_u32(out, img.width);
    wr_u32(out, img.height);  // positive: bottom-up
    wr_u16(out, 1);
    wr_u16(out, 24);
    wr_u32(out, 0);  // BI_RGB
    wr_u32(out, static_cast<std::uint32_t>(data_size));
    wr_u32(out, 2835);  // 72 dpi
    wr_u32(out, 2835);
    wr_u32(out, 0);
    wr_u32(out, 0);

    const std::size_t padding = stride - static_cast<std::size_t>(img.width) * 3;
    for (std::uint32_t y = 0; y < img.height; ++y) {
        const std::uint32_t src_row = img.height - 1 - y;
        for (std::uint32_t x = 0; x < img.width; ++x) {
            const std::size_t src = (static_cast<std::size_t>(src_row) * img.width + x) * 3;
            out.push_back(img.channels[src + 2]);
            out.push_back(img.channels[src + 1]);
            out.push_back(img.channels[src + 0]);
        }
        for (std::size_t p = 0; p < padding; ++p) {
            out.push_back(0);
        }
    }

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot write " + path.string());
    }
    f.write(reinterpret_cast<const char*>(out.data()),
            static_cast<std::streamsize>(out.size()));
    if (!f) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace

RgbImage load_image(const std::filesystem::path& path) {
    const std::string ext = lower_extension(path);
    if (ext == ".jpg" || ext == ".jpeg") {
        throw FormatError("lossy cover unsupported: " + path.string() +
                          " (JPEG re-encoding would destroy LSB data)");
    }

    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + path.string());
    }
    std::vector<std::uint8_t> file((std::istreambuf_iterator<char>(f)),
                                   std::istreambuf_iterator<char>());
    if (file.size() < 8) {
        throw DecodeError("file too short to be an image: " + path.string());
    }

    static const std::uint8_t png_sig[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
    if (std::memcmp(file.data(), png_sig, 8) == 0) {
        RgbImage img = load_png(path);
        check_dimensions(img, path.string());
        return img;
    }
    if (file[0] == 'B' && file[1] == 'M') {
        RgbImage img = load_bmp(file, path.string());
        check_dimensions(img, path.string());
        return img;
    }
    if (file[0] == 0xFF && file[1] == 0xD8 && file[2] == 0xFF) {
        throw FormatError("lossy cover unsupported: " + path.string() +
                          " (JPEG re-encoding would destroy LSB data)");
    }
    throw FormatError("unrecognized image format: " + path.string() +
                      " (PNG and 24-bit BMP are supported)");
}

void save_image(const RgbImage& img, const std::filesystem::path& path) {
    check_dimensions(img, "save_image");
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        save_png(img, path);
    } else if (ext == ".bmp") {
        save_bmp(img, path);
    } else if (ext == ".jpg" || ext == ".jpeg") {
        throw FormatError("lossy stego output unsupported: " + path.string() +
                          " (JPEG re-encoding would destroy the payload)");
    } else {
        throw FormatError("unsupported output extension '" + ext + "' for " +
                          path.string() + " (use .png or .bmp)");
    }
}

}  // namespace stegmatch
