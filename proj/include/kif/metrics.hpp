#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kif/gray_image.hpp"

namespace kif {

struct QualityReport {
    double mse = 0;
    std::optional<double> psnr_db; // empty when mse == 0 (infinite PSNR)

    bool infinite() const { return !psnr_db.has_value(); }
};

/// Σ (ref - test)² over all pixels, accumulated exactly.
std::uint64_t squared_error_sum(const GrayImage& reference, const GrayImage& test);

/// Mean squared error. Throws std::invalid_argument on a size mismatch.
double mse(const GrayImage& reference, const GrayImage& test);

/// 10·log10(255² / mse), with an empty psnr_db for identical images.
QualityReport psnr(const GrayImage& reference, const GrayImage& test);

double psnr_from_mse(double mse);

/// Shortest decimal text that round-trips `value` ("65025", "0.5", ...).
std::string format_number(double value);

/// PSNR as text: the number, or "inf".
std::string format_psnr(const QualityReport& report);

} // namespace kif
