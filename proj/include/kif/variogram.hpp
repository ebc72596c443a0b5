#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace kif {

/// One observed pixel: integer grid position and its intensity.
///
/// Samples extracted from an image carry z in [1, 254]; the kriging and
/// variogram routines themselves accept any finite z.
template <typename Scalar = double>
struct SamplePoint {
    int x = 0;
    int y = 0;
    Scalar z = 0;

    Eigen::Matrix<Scalar, 2, 1> position() const
    {
        return {static_cast<Scalar>(x), static_cast<Scalar>(y)};
    }
};

class VariogramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename Scalar = double>
struct EmpiricalVariogram {
    struct Bin {
        Scalar lag = 0;          // mean pair distance in the bin
        Scalar semivariance = 0; // half the mean squared difference
        std::size_t pair_count = 0;
    };
    std::vector<Bin> bins; // strictly increasing lag, empty bins omitted

    std::size_t total_pairs() const
    {
        std::size_t n = 0;
        for (const auto& b : bins)
            n += b.pair_count;
        return n;
    }
};

enum class ModelKind { nugget, linear, exponential };

inline std::string_view to_string(ModelKind kind)
{
    switch (kind) {
    case ModelKind::nugget: return "nugget";
    case ModelKind::linear: return "linear";
    case ModelKind::exponential: return "exponential";
    }
    return "unknown";
}

inline std::optional<ModelKind> parse_model_kind(std::string_view name)
{
    if (name == "nugget") return ModelKind::nugget;
    if (name == "linear") return ModelKind::linear;
    if (name == "exponential") return ModelKind::exponential;
    return std::nullopt;
}

/// Smallest nugget a fitted model may carry. An identically-zero variogram
/// makes the kriging matrix singular; the floor yields equal weights instead.
template <typename Scalar = double>
inline constexpr Scalar kNuggetFloor = Scalar(1e-6);

/// Parametric semivariogram. γ(0) is 0 for every kind so that kriging
/// reproduces observed values exactly.
template <typename Scalar = double>
struct VariogramModel {
    ModelKind kind = ModelKind::nugget;
    Scalar nugget = kNuggetFloor<Scalar>;
    Scalar slope = 0; // linear
    Scalar sill = 0;  // exponential partial sill
    Scalar range = 1; // exponential

    static VariogramModel pure_nugget(Scalar c0) { return {ModelKind::nugget, c0, 0, 0, 1}; }
    static VariogramModel linear(Scalar c0, Scalar slope) { return {ModelKind::linear, c0, slope, 0, 1}; }
    static VariogramModel exponential(Scalar c0, Scalar sill, Scalar range)
    {
        return {ModelKind::exponential, c0, 0, sill, range};
    }

    Scalar operator()(Scalar h) const
    {
        if (h <= 0)
            return 0;
        switch (kind) {
        case ModelKind::nugget: return nugget;
        case ModelKind::linear: return nugget + slope * h;
        case ModelKind::exponential: return nugget + sill * (1 - std::exp(-h / range));
        }
        return nugget;
    }
};

template <typename Scalar>
Scalar evaluate(const VariogramModel<Scalar>& model, Scalar h)
{
    return model(h);
}

/// Isotropic empirical semivariogram over all unordered sample pairs.
///
/// A pair at distance d lands in bin floor(d / bin_width); each bin reports the
/// mean member distance and Σ(zi - zj)² / (2 · pair_count).
template <typename Scalar>
EmpiricalVariogram<Scalar> empirical_semivariogram(std::span<const SamplePoint<Scalar>> samples,
                                                   Scalar bin_width = Scalar(1))
{
    if (samples.size() < 2)
        throw VariogramError("insufficient samples: need at least 2 points");
    if (!(bin_width > 0))
        throw std::invalid_argument("bin width must be positive");

    struct Accumulator {
        Scalar distance_sum = 0;
        Scalar squared_sum = 0;
        std::size_t count = 0;
    };
    std::vector<Accumulator> acc;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            const Scalar d = (samples[i].position() - samples[j].position()).norm();
            const auto bin = static_cast<std::size_t>(std::floor(d / bin_width));
            if (bin >= acc.size())
                acc.resize(bin + 1);
            const Scalar dz = samples[i].z - samples[j].z;
            acc[bin].distance_sum += d;
            acc[bin].squared_sum += dz * dz;
            ++acc[bin].count;
        }
    }

    EmpiricalVariogram<Scalar> ev;
    for (const auto& a : acc) {
        if (a.count == 0)
            continue;
        const auto n = static_cast<Scalar>(a.count);
        ev.bins.push_back({a.distance_sum / n, a.squared_sum / (2 * n), a.count});
    }
    return ev;
}

template <typename Scalar>
EmpiricalVariogram<Scalar> empirical_semivariogram(const std::vector<SamplePoint<Scalar>>& samples,
                                                   Scalar bin_width = Scalar(1))
{
    return empirical_semivariogram(std::span<const SamplePoint<Scalar>>(samples), bin_width);
}

namespace detail {

template <typename Scalar>
struct AffineFit {
    Scalar intercept = 0;
    Scalar coefficient = 0;
    Scalar sse = std::numeric_limits<Scalar>::infinity();
};

// Weighted least squares for y ≈ a + b·f with a, b ≥ 0. Tries the free
// optimum first and otherwise the best boundary solution.
template <typename Scalar>
AffineFit<Scalar> nonneg_affine_fit(const Eigen::Array<Scalar, Eigen::Dynamic, 1>& w,
                                    const Eigen::Array<Scalar, Eigen::Dynamic, 1>& f,
                                    const Eigen::Array<Scalar, Eigen::Dynamic, 1>& y)
{
    auto sse = [&](Scalar a, Scalar b) { return (w * (y - a - b * f).square()).sum(); };

    const Scalar sw = w.sum();
    const Scalar swf = (w * f).sum();
    const Scalar swff = (w * f * f).sum();
    const Scalar swy = (w * y).sum();
    const Scalar swfy = (w * f * y).sum();

    AffineFit<Scalar> best;
    auto consider = [&](Scalar a, Scalar b) {
        if (!(a >= 0 && b >= 0) || !std::isfinite(a) || !std::isfinite(b))
            return;
        const Scalar e = sse(a, b);
        if (e < best.sse)
            best = {a, b, e};
    };

    const Scalar det = sw * swff - swf * swf;
    if (std::abs(det) > std::numeric_limits<Scalar>::epsilon() * sw * swff) {
        consider((swff * swy - swf * swfy) / det, (sw * swfy - swf * swy) / det);
    }
    if (best.sse < std::numeric_limits<Scalar>::infinity())
        return best;
    if (sw > 0)
        consider(std::max(Scalar(0), swy / sw), 0);
    if (swff > 0)
        consider(0, std::max(Scalar(0), swfy / swff));
    consider(0, 0);
    return best;
}

template <typename Scalar>
VariogramModel<Scalar> apply_floor(VariogramModel<Scalar> model)
{
    const Scalar structured = model.kind == ModelKind::linear        ? model.slope
                              : model.kind == ModelKind::exponential ? model.sill
                                                                     : Scalar(0);
    if (structured <= 0 && model.nugget < kNuggetFloor<Scalar>)
        model.nugget = kNuggetFloor<Scalar>;
    return model;
}

} // namespace detail

/// Fits a model of the requested kind to the empirical bins, weighting each
/// bin by its pair count. Parameters are kept nonnegative; the exponential
/// fit falls back to the linear fit when it cannot resolve a finite range.
template <typename Scalar>
VariogramModel<Scalar> fit_model(const EmpiricalVariogram<Scalar>& ev, ModelKind kind)
{
    using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;
    if (ev.bins.empty())
        throw VariogramError("insufficient data: empty variogram");

    const auto n = static_cast<Eigen::Index>(ev.bins.size());
    Array w(n), h(n), g(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& b = ev.bins[static_cast<std::size_t>(i)];
        w[i] = static_cast<Scalar>(b.pair_count);
        h[i] = b.lag;
        g[i] = b.semivariance;
    }

    auto fit_linear = [&] {
        const auto f = detail::nonneg_affine_fit<Scalar>(w, h, g);
        return detail::apply_floor(VariogramModel<Scalar>::linear(f.intercept, f.coefficient));
    };

    switch (kind) {
    case ModelKind::nugget: {
        const Scalar mean = (w * g).sum() / w.sum();
        return VariogramModel<Scalar>::pure_nugget(std::max(mean, kNuggetFloor<Scalar>));
    }
    case ModelKind::linear:
        return fit_linear();
    case ModelKind::exponential: {
        if (n < 3)
            return fit_linear();
        // Variable projection: for a fixed range the model is affine in
        // (nugget, sill), so scan the range and solve the inner problem exactly.
        const Scalar lo = std::log(h.minCoeff() / 4);
        const Scalar hi = std::log(h.maxCoeff() * 10);
        auto inner = [&](Scalar log_range) {
            const Array f = Scalar(1) - (-h / std::exp(log_range)).exp();
            return detail::nonneg_affine_fit<Scalar>(w, f, g);
        };
        constexpr int kGrid = 64;
        int best_i = 0;
        Scalar best_sse = std::numeric_limits<Scalar>::infinity();
        for (int i = 0; i <= kGrid; ++i) {
            const Scalar e = inner(lo + (hi - lo) * i / kGrid).sse;
            if (e < best_sse) {
                best_sse = e;
                best_i = i;
            }
        }
        if (!std::isfinite(best_sse) || best_i == kGrid)
            return fit_linear();

        // Golden-section refinement between the neighbouring grid nodes.
        Scalar a = lo + (hi - lo) * std::max(0, best_i - 1) / kGrid;
        Scalar b = lo + (hi - lo) * std::min(kGrid, best_i + 1) / kGrid;
        const Scalar ratio = (std::sqrt(Scalar(5)) - 1) / 2;
        Scalar c = b - ratio * (b - a);
        Scalar d = a + ratio * (b - a);
        for (int it = 0; it < 60; ++it) {
            if (inner(c).sse < inner(d).sse)
                b = d;
            else
                a = c;
            c = b - ratio * (b - a);
            d = a + ratio * (b - a);
        }
        const Scalar log_range = (a + b) / 2;
        const auto f = inner(log_range);
        if (!std::isfinite(f.sse))
            return fit_linear();
        return detail::apply_floor(
            VariogramModel<Scalar>::exponential(f.intercept, f.coefficient, std::exp(log_range)));
    }
    }
    return fit_linear();
}

} // namespace kif
