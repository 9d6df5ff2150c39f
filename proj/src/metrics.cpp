#include "stegmatch/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "stegmatch/errors.hpp"

namespace stegmatch {

namespace {
constexpr double kPeakSquared = 255.0 * 255.0;
}

double mse(const RgbImage& a, const RgbImage& b) {
    if (a.width != b.width || a.height != b.height) {
        throw ShapeError("image dimensions differ: " + std::to_string(a.width) + "x" +
                         std::to_string(a.height) + " vs " + std::to_string(b.width) +
                         "x" + std::to_string(b.height));
    }
    // Exact integer sum; 255^2 * N stays far below 2^63 for any real image.
    std::uint64_t sum = 0;
    const std::size_t n = a.channels.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t d =
            static_cast<std::int64_t>(a.channels[i]) - static_cast<std::int64_t>(b.channels[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(sum) / static_cast<double>(n);
}

PsnrReport psnr(const RgbImage& a, const RgbImage& b) {
    PsnrReport report;
    report.mse = mse(a, b);
    if (report.mse > 0.0) {
        report.psnr_db = 10.0 * std::log10(kPeakSquared / report.mse);
    }
    return report;
}

}  // namespace stegmatch
