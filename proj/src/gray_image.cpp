#include "kif/gray_image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kif {

namespace {

void check_dimensions(Eigen::Index width, Eigen::Index height)
{
    if (width < 1 || height < 1) {
        throw std::invalid_argument("image dimensions must be positive, got "
                                    + std::to_string(width) + "x" + std::to_string(height));
    }
}

} // namespace

GrayImage::GrayImage(int width, int height, std::uint8_t fill)
{
    check_dimensions(width, height);
    pixels_ = PixelMatrix::Constant(height, width, fill);
}

GrayImage::GrayImage(PixelMatrix pixels) : pixels_(std::move(pixels))
{
    check_dimensions(pixels_.cols(), pixels_.rows());
}

GrayImage GrayImage::from_row_major(int width, int height, std::span<const std::uint8_t> values)
{
    check_dimensions(width, height);
    if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw std::invalid_argument("pixel count " + std::to_string(values.size())
                                    + " does not match " + std::to_string(width) + "x"
                                    + std::to_string(height));
    }
    GrayImage image(width, height);
    std::copy(values.begin(), values.end(), image.data().begin());
    return image;
}

NoiseMask::NoiseMask(int width, int height, bool fill)
{
    check_dimensions(width, height);
    flags_ = FlagMatrix::Constant(height, width, fill);
}

Window Window::expanded(int margin, int image_width, int image_height) const
{
    const int x0 = std::max(0, x - margin);
    const int y0 = std::max(0, y - margin);
    const int x1 = std::min(image_width, x + width + margin);
    const int y1 = std::min(image_height, y + height + margin);
    return {x0, y0, x1 - x0, y1 - y0};
}

} // namespace kif
