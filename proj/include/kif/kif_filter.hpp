#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kif/gray_image.hpp"
#include "kif/kriging.hpp"
#include "kif/variogram.hpp"

namespace kif {

/// Kriging interpolation filter settings.
struct FilterConfig {
    int window_size = 8;
    ModelKind model_kind = ModelKind::linear;
    double bin_width = 1.0;
    double ridge = kDefaultRidge;
    int min_samples = 3;
    int max_expansion = 3; // in window_size steps per side
    // Lag bins backed by fewer pairs than this are left out of the model fit.
    // With fewer than two reliable bins the window falls back to a nugget model.
    std::size_t min_pairs_per_bin = 30;

    /// Throws std::invalid_argument for an out-of-range field.
    void validate() const;
};

enum class TileOrder { row_major, reversed };

struct PixelPrediction {
    int x = 0;
    int y = 0;
    std::uint8_t value = 0;

    friend bool operator==(const PixelPrediction&, const PixelPrediction&) = default;
};

/// Unmasked pixels inside `window` in row-major order, with coordinates
/// relative to (origin_x, origin_y).
std::vector<SamplePoint<double>> extract_samples(const GrayImage& image, const NoiseMask& mask,
                                                 const Window& window, int origin_x, int origin_y);

/// Same, with coordinates local to the window's own top-left corner.
inline std::vector<SamplePoint<double>> extract_samples(const GrayImage& image, const NoiseMask& mask,
                                                        const Window& window)
{
    return extract_samples(image, mask, window, window.x, window.y);
}

/// Variogram used for one window's samples: the empirical semivariogram is
/// fitted with `cfg.model_kind` over its well-populated lag bins, and with a
/// nugget model when too few samples or bins remain.
VariogramModel<double> estimate_window_model(std::span<const SamplePoint<double>> samples,
                                             const FilterConfig& cfg);

/// Converts a raw kriging estimate to a pixel: round half away from zero,
/// then clamp to [1, 254] so a prediction is never mistaken for an impulse.
std::uint8_t quantize_prediction(double value);

/// Predictions for every masked pixel of `window`, in row-major order and in
/// image coordinates. Sample-starved windows are grown by cfg.window_size per
/// side, up to cfg.max_expansion times; predictions stay inside `window`.
std::vector<PixelPrediction> denoise_window(const GrayImage& image, const NoiseMask& mask,
                                            const Window& window, const FilterConfig& cfg);

/// Non-overlapping k×k tiles in row-major order; edge tiles may be smaller.
std::vector<Window> tile_windows(int width, int height, int window_size);

/// Full filter: detect impulses, krige each tile against the original image,
/// write the predictions. Unflagged pixels are copied unchanged.
GrayImage kif_denoise(const GrayImage& image, const FilterConfig& cfg = {},
                      TileOrder order = TileOrder::row_major);

} // namespace kif
