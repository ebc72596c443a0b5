#include "kif/kif_filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "kif/noise_model.hpp"

namespace kif {

void FilterConfig::validate() const
{
    if (window_size < 2)
        throw std::invalid_argument("window size must be at least 2");
    if (min_samples < 1)
        throw std::invalid_argument("min_samples must be at least 1");
    if (max_expansion < 0)
        throw std::invalid_argument("max_expansion must be nonnegative");
    if (!(bin_width > 0))
        throw std::invalid_argument("bin width must be positive");
    if (!(ridge >= 0))
        throw std::invalid_argument("ridge must be nonnegative");
}

std::vector<SamplePoint<double>> extract_samples(const GrayImage& image, const NoiseMask& mask,
                                                 const Window& window, int origin_x, int origin_y)
{
    std::vector<SamplePoint<double>> samples;
    for (int y = window.y; y < window.y + window.height; ++y) {
        for (int x = window.x; x < window.x + window.width; ++x) {
            if (!mask(y, x))
                samples.push_back({x - origin_x, y - origin_y, static_cast<double>(image(y, x))});
        }
    }
    return samples;
}

VariogramModel<double> estimate_window_model(std::span<const SamplePoint<double>> samples,
                                             const FilterConfig& cfg)
{
    using Model = VariogramModel<double>;
    if (samples.size() < 2)
        return Model::pure_nugget(kNuggetFloor<double>);

    const auto ev = empirical_semivariogram(samples, cfg.bin_width);
    if (cfg.model_kind == ModelKind::nugget)
        return fit_model(ev, ModelKind::nugget);

    EmpiricalVariogram<double> reliable;
    for (const auto& bin : ev.bins) {
        if (bin.pair_count >= cfg.min_pairs_per_bin)
            reliable.bins.push_back(bin);
    }
    if (reliable.bins.size() < 2)
        return fit_model(ev, ModelKind::nugget);
    try {
        return fit_model(reliable, cfg.model_kind);
    } catch (const VariogramError&) {
        return fit_model(ev, ModelKind::nugget);
    }
}

std::uint8_t quantize_prediction(double value)
{
    const long rounded = std::lround(value);
    return static_cast<std::uint8_t>(std::clamp(rounded, 1L, 254L));
}

namespace {

// Lower median of the unmasked pixels, or 128 when every pixel is masked.
std::uint8_t global_fallback(const GrayImage& image, const NoiseMask& mask)
{
    std::vector<std::uint8_t> clean;
    const auto pixels = image.data();
    const auto& flags = mask.flags();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        if (!flags.data()[i])
            clean.push_back(pixels[i]);
    }
    if (clean.empty())
        return 128;
    const auto mid = clean.begin() + static_cast<std::ptrdiff_t>((clean.size() - 1) / 2);
    std::nth_element(clean.begin(), mid, clean.end());
    return *mid;
}

std::vector<double> krige(std::span<const SamplePoint<double>> samples,
                          std::span<const Coordinate<double>> targets, const FilterConfig& cfg)
{
    try {
        return predict_many(samples, targets, estimate_window_model(samples, cfg), cfg.ridge);
    } catch (const KrigingError&) {
    }
    try {
        return predict_many(samples, targets, VariogramModel<double>::pure_nugget(kNuggetFloor<double>),
                            cfg.ridge);
    } catch (const KrigingError&) {
    }
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0,
                                        [](double acc, const auto& s) { return acc + s.z; })
                        / static_cast<double>(samples.size());
    return std::vector<double>(targets.size(), mean);
}

} // namespace

std::vector<PixelPrediction> denoise_window(const GrayImage& image, const NoiseMask& mask,
                                            const Window& window, const FilterConfig& cfg)
{
    std::vector<PixelPrediction> predictions;
    std::vector<Coordinate<double>> targets;
    for (int y = window.y; y < window.y + window.height; ++y) {
        for (int x = window.x; x < window.x + window.width; ++x) {
            if (mask(y, x)) {
                predictions.push_back({x, y, 0});
                targets.emplace_back(x - window.x, y - window.y);
            }
        }
    }
    if (predictions.empty())
        return predictions;

    auto samples = extract_samples(image, mask, window);
    for (int step = 1; step <= cfg.max_expansion && samples.size() < static_cast<std::size_t>(cfg.min_samples);
         ++step) {
        const Window grown = window.expanded(step * cfg.window_size, image.width(), image.height());
        samples = extract_samples(image, mask, grown, window.x, window.y);
    }

    if (samples.empty()) {
        const std::uint8_t value = quantize_prediction(global_fallback(image, mask));
        for (auto& p : predictions)
            p.value = value;
        return predictions;
    }

    const auto estimates = krige(samples, targets, cfg);
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        const double e = std::isfinite(estimates[i]) ? estimates[i] : samples.front().z;
        predictions[i].value = quantize_prediction(e);
    }
    return predictions;
}

std::vector<Window> tile_windows(int width, int height, int window_size)
{
    if (window_size < 1)
        throw std::invalid_argument("window size must be positive");
    std::vector<Window> tiles;
    for (int y = 0; y < height; y += window_size) {
        for (int x = 0; x < width; x += window_size)
            tiles.push_back({x, y, std::min(window_size, width - x), std::min(window_size, height - y)});
    }
    return tiles;
}

GrayImage kif_denoise(const GrayImage& image, const FilterConfig& cfg, TileOrder order)
{
    cfg.validate();
    const NoiseMask mask = detect_noise(image);
    GrayImage output = image;
    if (mask.count() == 0)
        return output;

    auto tiles = tile_windows(image.width(), image.height(), cfg.window_size);
    if (order == TileOrder::reversed)
        std::reverse(tiles.begin(), tiles.end());
    for (const auto& tile : tiles) {
        for (const auto& p : denoise_window(image, mask, tile, cfg))
            output(p.y, p.x) = p.value;
    }
    return output;
}

} // namespace kif
