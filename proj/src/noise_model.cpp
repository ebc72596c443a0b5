#include "kif/noise_model.hpp"

#include <random>
#include <stdexcept>

namespace kif {

void NoiseSpec::validate() const
{
    if (!(density >= 0.0 && density <= 1.0))
        throw std::invalid_argument("noise density must lie in [0, 1]");
    if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0))
        throw std::invalid_argument("salt fraction must lie in [0, 1]");
}

namespace {

double unit_draw(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

NoiseInjection inject_salt_pepper_counted(const GrayImage& image, const NoiseSpec& spec)
{
    spec.validate();
    NoiseInjection result{image, 0};
    std::mt19937_64 rng(spec.seed);
    for (auto& pixel : result.image.data()) {
        if (unit_draw(rng) < spec.density) {
            pixel = unit_draw(rng) < spec.salt_fraction ? kSalt : kPepper;
            ++result.corrupted;
        }
    }
    return result;
}

GrayImage inject_salt_pepper(const GrayImage& image, const NoiseSpec& spec)
{
    return inject_salt_pepper_counted(image, spec).image;
}

NoiseMask detect_noise(const GrayImage& image)
{
    const auto& p = image.pixels();
    return NoiseMask(FlagMatrix(p.array() == kPepper || p.array() == kSalt));
}

} // namespace kif
