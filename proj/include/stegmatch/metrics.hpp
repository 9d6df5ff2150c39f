#pragma once

#include <optional>

#include "stegmatch/image.hpp"

namespace stegmatch {

struct PsnrReport {
    double mse = 0.0;
    std::optional<double> psnr_db;  // empty exactly when the images are identical (mse == 0)

    bool identical() const { return !psnr_db.has_value(); }
};

/// Mean squared error over all channel bytes. The sum is accumulated in
/// exact integer arithmetic and divided once at the end.
/// Throws ShapeError when dimensions differ.
double mse(const RgbImage& a, const RgbImage& b);

/// 10 * log10(255^2 / mse), or the identical-images case when mse == 0.
PsnrReport psnr(const RgbImage& a, const RgbImage& b);

}  // namespace stegmatch
