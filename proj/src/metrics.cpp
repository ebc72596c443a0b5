#include "kif/metrics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace kif {

std::uint64_t squared_error_sum(const GrayImage& reference, const GrayImage& test)
{
    if (reference.width() != test.width() || reference.height() != test.height()) {
        throw std::invalid_argument("dimension mismatch: " + std::to_string(reference.width()) + "x"
                                    + std::to_string(reference.height()) + " vs "
                                    + std::to_string(test.width()) + "x" + std::to_string(test.height()));
    }
    const auto a = reference.data();
    const auto b = test.data();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

double mse(const GrayImage& reference, const GrayImage& test)
{
    return static_cast<double>(squared_error_sum(reference, test)) / static_cast<double>(reference.size());
}

double psnr_from_mse(double mse)
{
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

QualityReport psnr(const GrayImage& reference, const GrayImage& test)
{
    QualityReport report;
    report.mse = mse(reference, test);
    if (report.mse > 0)
        report.psnr_db = psnr_from_mse(report.mse);
    return report;
}

std::string format_number(double value)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{})
        return std::to_string(value);
    return std::string(buf, end);
}

std::string format_psnr(const QualityReport& report)
{
    return report.infinite() ? "inf" : format_number(*report.psnr_db);
}

} // namespace kif
