#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace stegmatch {

/// 8-bit RGB raster. Channel bytes are row-major by pixel, R then G then B
/// within each pixel; embedding consumes them in exactly this order.
struct RgbImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<std::uint8_t> channels;  // width * height * 3

    // One byte per pixel when the source file had an alpha channel.
    // Carried through load/save verbatim, never embedded into.
    std::vector<std::uint8_t> alpha;

    std::size_t channel_count() const { return channels.size(); }
    bool has_alpha() const { return !alpha.empty(); }
};

/// Loads a PNG or 24-bit uncompressed BMP.
///
/// Lossy formats (JPEG) are rejected with FormatError: an LSB payload would
/// not survive re-encoding. Grayscale and palette images are rejected too;
/// the embedding model is defined per RGB byte triple. Non-8-bit depths
/// raise DepthError, undecodable files DecodeError.
RgbImage load_image(const std::filesystem::path& path);

/// Saves as PNG or BMP depending on the file extension. Output is lossless:
/// loading it back reproduces the channel bytes exactly.
void save_image(const RgbImage& img, const std::filesystem::path& path);

}  // namespace stegmatch
