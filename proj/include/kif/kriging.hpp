#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "kif/variogram.hpp"

namespace kif {

class KrigingError : public std::runtime_error {
public:
    enum class Reason { insufficient_samples, duplicate_samples, degenerate_geometry };

    KrigingError(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

template <typename Scalar = double>
using Coordinate = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar = double>
struct KrigingSolution {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
    Scalar lagrange = 0;
    Scalar predicted = 0;
    Scalar variance = 0; // clamped at 0
};

inline constexpr double kDefaultRidge = 1e-8;
inline constexpr double kMinPivot = 1e-12;

/// Ordinary kriging system for a fixed sample set and variogram.
///
/// Factors the augmented matrix
///
///     [ Γ + ridge·I   1 ] [λ]   [γ0]
///     [ 1ᵀ            0 ] [μ] = [ 1]
///
/// once with partial-pivot LU, then solves it for any number of targets.
/// The ridge touches only the sample block.
template <typename Scalar = double>
class OrdinaryKriging {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    OrdinaryKriging(std::span<const SamplePoint<Scalar>> samples, const VariogramModel<Scalar>& model,
                    Scalar ridge = Scalar(kDefaultRidge))
        : samples_(samples.begin(), samples.end())
        , model_(model)
    {
        const auto n = static_cast<Eigen::Index>(samples_.size());
        if (n == 0)
            throw KrigingError(KrigingError::Reason::insufficient_samples, "kriging needs at least one sample");
        if (ridge < 0)
            throw std::invalid_argument("ridge must be nonnegative");

        Matrix system(n + 1, n + 1);
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& pi = samples_[static_cast<std::size_t>(i)];
            system(i, i) = model_(Scalar(0)) + ridge;
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const auto& pj = samples_[static_cast<std::size_t>(j)];
                if (pi.x == pj.x && pi.y == pj.y) {
                    throw KrigingError(KrigingError::Reason::duplicate_samples,
                                       "duplicate sample at (" + std::to_string(pi.x) + ", "
                                           + std::to_string(pi.y) + ")");
                }
                system(i, j) = system(j, i) = model_((pi.position() - pj.position()).norm());
            }
        }
        system.col(n).head(n).setOnes();
        system.row(n).head(n).setOnes();
        system(n, n) = 0;

        lu_.compute(system);
        if (lu_.matrixLU().diagonal().cwiseAbs().minCoeff() < Scalar(kMinPivot)) {
            throw KrigingError(KrigingError::Reason::degenerate_geometry,
                               "kriging system is singular after regularization");
        }
    }

    Eigen::Index sample_count() const { return static_cast<Eigen::Index>(samples_.size()); }

    KrigingSolution<Scalar> solve(const Coordinate<Scalar>& target) const
    {
        const Eigen::Index n = sample_count();
        Vector rhs(n + 1);
        for (Eigen::Index i = 0; i < n; ++i)
            rhs[i] = model_((samples_[static_cast<std::size_t>(i)].position() - target).norm());
        rhs[n] = 1;

        const Vector x = lu_.solve(rhs);
        KrigingSolution<Scalar> s;
        s.weights = x.head(n);
        s.lagrange = x[n];
        s.predicted = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            s.predicted += s.weights[i] * samples_[static_cast<std::size_t>(i)].z;
        s.variance = std::max(Scalar(0), s.weights.dot(rhs.head(n)) + s.lagrange);
        return s;
    }

    Scalar predict(const Coordinate<Scalar>& target) const { return solve(target).predicted; }

private:
    std::vector<SamplePoint<Scalar>> samples_;
    VariogramModel<Scalar> model_;
    Eigen::PartialPivLU<Matrix> lu_;
};

template <typename Scalar>
KrigingSolution<Scalar> solve_ordinary_kriging(std::span<const SamplePoint<Scalar>> samples,
                                               const Coordinate<Scalar>& target,
                                               const VariogramModel<Scalar>& model,
                                               Scalar ridge = Scalar(kDefaultRidge))
{
    return OrdinaryKriging<Scalar>(samples, model, ridge).solve(target);
}

/// Predictions at each target, sharing one factorization.
template <typename Scalar>
std::vector<Scalar> predict_many(std::span<const SamplePoint<Scalar>> samples,
                                 std::span<const Coordinate<Scalar>> targets,
                                 const VariogramModel<Scalar>& model,
                                 Scalar ridge = Scalar(kDefaultRidge))
{
    std::vector<Scalar> out;
    if (targets.empty())
        return out;
    const OrdinaryKriging<Scalar> system(samples, model, ridge);
    out.reserve(targets.size());
    for (const auto& t : targets)
        out.push_back(system.predict(t));
    return out;
}

} // namespace kif
