#pragma once

#include <cstddef>
#include <cstdint>

#include "kif/gray_image.hpp"

namespace kif {

inline constexpr std::uint8_t kPepper = 0;
inline constexpr std::uint8_t kSalt = 255;

struct NoiseSpec {
    double density = 0.0;       // probability that a pixel is corrupted
    double salt_fraction = 0.5; // share of corrupted pixels set to 255
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless both fractions lie in [0, 1].
    void validate() const;
};

struct NoiseInjection {
    GrayImage image;
    std::size_t corrupted = 0; // pixels that drew a corruption event
};

/// Salt & pepper corruption with independent per-pixel Bernoulli draws.
///
/// Randomness comes from std::mt19937_64 seeded with `spec.seed`. Pixels are
/// visited in row-major order; each pixel consumes one 64-bit draw to decide
/// corruption and, only when corrupted, a second draw to pick salt or pepper.
/// A draw maps to [0, 1) as (bits >> 11) * 2^-53, which keeps the output
/// identical on every conforming standard library.
NoiseInjection inject_salt_pepper_counted(const GrayImage& image, const NoiseSpec& spec);

GrayImage inject_salt_pepper(const GrayImage& image, const NoiseSpec& spec);

/// Flags every pixel whose value is 0 or 255.
NoiseMask detect_noise(const GrayImage& image);

inline bool is_impulse(std::uint8_t v) { return v == kPepper || v == kSalt; }

} // namespace kif
