#include "kif/baseline_filters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace kif {

namespace {

void require_odd_window(int k, const char* what)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument(std::string(what) + " must be an odd integer >= 3, got "
                                    + std::to_string(k));
}

// Fills `out` with the k×k neighbourhood of (y, x), clamping coordinates.
void gather(const GrayImage& image, int y, int x, int k, std::vector<std::uint8_t>& out)
{
    const int r = k / 2;
    out.clear();
    for (int dy = -r; dy <= r; ++dy) {
        const int yy = std::clamp(y + dy, 0, image.height() - 1);
        for (int dx = -r; dx <= r; ++dx)
            out.push_back(image(yy, std::clamp(x + dx, 0, image.width() - 1)));
    }
}

std::uint8_t median_of(std::vector<std::uint8_t>& values)
{
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

} // namespace

GrayImage median_filter(const GrayImage& image, int k)
{
    require_odd_window(k, "median window");
    GrayImage out(image.width(), image.height());
    std::vector<std::uint8_t> buffer;
    buffer.reserve(static_cast<std::size_t>(k * k));
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            gather(image, y, x, k, buffer);
            out(y, x) = median_of(buffer);
        }
    }
    return out;
}

GrayImage adaptive_median_filter(const GrayImage& image, int max_window)
{
    require_odd_window(max_window, "adaptive median max window");
    GrayImage out(image.width(), image.height());
    std::vector<std::uint8_t> buffer;
    buffer.reserve(static_cast<std::size_t>(max_window * max_window));
    for (int y = 0; y < image.height(); ++y) {
        for (int x = 0; x < image.width(); ++x) {
            const std::uint8_t pixel = image(y, x);
            std::uint8_t median = pixel;
            bool resolved = false;
            for (int k = 3; k <= max_window; k += 2) {
                gather(image, y, x, k, buffer);
                const auto [lo, hi] = std::minmax_element(buffer.begin(), buffer.end());
                const std::uint8_t min = *lo;
                const std::uint8_t max = *hi;
                median = median_of(buffer);
                if (min < median && median < max) {
                    out(y, x) = (min < pixel && pixel < max) ? pixel : median;
                    resolved = true;
                    break;
                }
            }
            if (!resolved)
                out(y, x) = median;
        }
    }
    return out;
}

} // namespace kif
