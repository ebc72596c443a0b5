#pragma once

#include <cstdint>
#include <span>

#include <Eigen/Core>

namespace kif {

using PixelMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FlagMatrix = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// 8-bit grayscale raster, row-major with a top-left origin.
///
/// Rows index y and columns index x, so `image(y, x)` reads the pixel in
/// row y, column x. Both dimensions are at least 1.
class GrayImage {
public:
    GrayImage(int width, int height, std::uint8_t fill = 0);
    explicit GrayImage(PixelMatrix pixels);

    /// Copies `width * height` row-major values; throws std::invalid_argument
    /// on a size mismatch or an empty dimension.
    static GrayImage from_row_major(int width, int height, std::span<const std::uint8_t> values);

    int width() const { return static_cast<int>(pixels_.cols()); }
    int height() const { return static_cast<int>(pixels_.rows()); }
    std::size_t size() const { return static_cast<std::size_t>(pixels_.size()); }

    std::uint8_t operator()(int y, int x) const { return pixels_(y, x); }
    std::uint8_t& operator()(int y, int x) { return pixels_(y, x); }

    const PixelMatrix& pixels() const { return pixels_; }
    PixelMatrix& pixels() { return pixels_; }

    std::span<const std::uint8_t> data() const { return {pixels_.data(), size()}; }
    std::span<std::uint8_t> data() { return {pixels_.data(), size()}; }

    friend bool operator==(const GrayImage& a, const GrayImage& b)
    {
        return a.pixels_.rows() == b.pixels_.rows() && a.pixels_.cols() == b.pixels_.cols()
            && a.pixels_ == b.pixels_;
    }

private:
    PixelMatrix pixels_;
};

/// Per-pixel "is impulse-valued" flags with the same geometry as a GrayImage.
class NoiseMask {
public:
    NoiseMask(int width, int height, bool fill = false);
    explicit NoiseMask(FlagMatrix flags) : flags_(std::move(flags)) {}

    int width() const { return static_cast<int>(flags_.cols()); }
    int height() const { return static_cast<int>(flags_.rows()); }

    bool operator()(int y, int x) const { return flags_(y, x); }
    bool& operator()(int y, int x) { return flags_(y, x); }

    const FlagMatrix& flags() const { return flags_; }
    std::size_t count() const { return static_cast<std::size_t>(flags_.count()); }

    friend bool operator==(const NoiseMask& a, const NoiseMask& b)
    {
        return a.flags_.rows() == b.flags_.rows() && a.flags_.cols() == b.flags_.cols()
            && (a.flags_ == b.flags_).all();
    }

private:
    FlagMatrix flags_;
};

/// Half-open pixel rectangle [x, x + width) × [y, y + height).
struct Window {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;

    bool contains(int px, int py) const
    {
        return px >= x && px < x + width && py >= y && py < y + height;
    }

    /// Grows by `margin` on every side, then clips to a width × height image.
    Window expanded(int margin, int image_width, int image_height) const;

    friend bool operator==(const Window&, const Window&) = default;
};

} // namespace kif
