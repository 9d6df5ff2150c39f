#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "stegmatch/image.hpp"

namespace testutil {

inline stegmatch::RgbImage uniform_image(std::mt19937_64& rng, std::uint32_t w,
                                         std::uint32_t h) {
    stegmatch::RgbImage img;
    img.width = w;
    img.height = h;
    img.channels.resize(static_cast<std::size_t>(w) * h * 3);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& c : img.channels) {
        c = static_cast<std::uint8_t>(byte(rng));
    }
    return img;
}

inline stegmatch::RgbImage constant_image(std::uint32_t w, std::uint32_t h,
                                          std::uint8_t value) {
    stegmatch::RgbImage img;
    img.width = w;
    img.height = h;
    img.channels.assign(static_cast<std::size_t>(w) * h * 3, value);
    return img;
}

inline stegmatch::RgbImage gradient_image(std::uint32_t w, std::uint32_t h) {
    stegmatch::RgbImage img;
    img.width = w;
    img.height = h;
    img.channels.resize(static_cast<std::size_t>(w) * h * 3);
    for (std::uint32_t y = 0; y < h; ++y) {
        for (std::uint32_t x = 0; x < w; ++x) {
            const std::size_t i = (static_cast<std::size_t>(y) * w + x) * 3;
            img.channels[i + 0] = static_cast<std::uint8_t>(x * 5);
            img.channels[i + 1] = static_cast<std::uint8_t>(y * 5);
            img.channels[i + 2] = static_cast<std::uint8_t>((x + y) * 3);
        }
    }
    return img;
}

inline std::vector<std::uint8_t> random_payload(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> payload(n);
    std::uniform_int_distribution<int> byte(0, 255);
    for (auto& b : payload) {
        b = static_cast<std::uint8_t>(byte(rng));
    }
    return payload;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("stegmatch-test-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace testutil
