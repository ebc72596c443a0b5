#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "kif/variogram.hpp"
#include "test_support.hpp"

namespace kif {
namespace {

using Samples = std::vector<SamplePoint<double>>;

// Clean pixels of the worked example as (column, row, z), 1-based.
Samples worked_example_samples()
{
    return {{2, 1, 88}, {3, 1, 85}, {1, 2, 88}, {2, 3, 88}, {3, 3, 86}};
}

Samples random_samples(std::mt19937_64& rng, std::size_t count, int extent)
{
    std::uniform_int_distribution<int> coord(0, extent - 1);
    std::uniform_real_distribution<double> value(1.0, 254.0);
    Samples s;
    while (s.size() < count) {
        const int x = coord(rng), y = coord(rng);
        if (std::none_of(s.begin(), s.end(), [&](const auto& p) { return p.x == x && p.y == y; }))
            s.push_back({x, y, value(rng)});
    }
    return s;
}

void expect_same_bins(const EmpiricalVariogram<double>& a, const EmpiricalVariogram<double>& b, double tol)
{
    ASSERT_EQ(a.bins.size(), b.bins.size());
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
        EXPECT_NEAR(a.bins[i].lag, b.bins[i].lag, tol);
        EXPECT_NEAR(a.bins[i].semivariance, b.bins[i].semivariance, tol);
        EXPECT_EQ(a.bins[i].pair_count, b.bins[i].pair_count);
    }
}

TEST(EmpiricalSemivariogram, SinglePair)
{
    const Samples s{{0, 0, 100}, {1, 0, 104}};
    const auto ev = empirical_semivariogram(s, 1.5);
    ASSERT_EQ(ev.bins.size(), 1u);
    EXPECT_DOUBLE_EQ(ev.bins[0].lag, 1.0);
    EXPECT_DOUBLE_EQ(ev.bins[0].semivariance, 8.0);
    EXPECT_EQ(ev.bins[0].pair_count, 1u);
}

TEST(EmpiricalSemivariogram, ConstantFieldIsZero)
{
    const Samples s{{0, 0, 50}, {3, 1, 50}, {2, 5, 50}, {7, 7, 50}};
    for (const auto& b : empirical_semivariogram(s, 1.0).bins)
        EXPECT_EQ(b.semivariance, 0.0);
}

TEST(EmpiricalSemivariogram, WorkedExampleMatchesEnumeration)
{
    // Frozen from exhaustive enumeration of the 10 pairs:
    //   [1,2): distances 1, 1, √2, √2; squared diffs 9, 4, 0, 0
    //   [2,3): distances 2, 2, √5 ×4;  squared diffs 0, 1, 9, 4, 9, 4
    const auto ev = empirical_semivariogram(worked_example_samples(), 1.0);
    ASSERT_EQ(ev.bins.size(), 2u);
    EXPECT_NEAR(ev.bins[0].lag, 1.2071067811865475, 1e-12);
    EXPECT_NEAR(ev.bins[0].semivariance, 1.625, 1e-12);
    EXPECT_EQ(ev.bins[0].pair_count, 4u);
    EXPECT_NEAR(ev.bins[1].lag, 2.1573786516665265, 1e-12);
    EXPECT_NEAR(ev.bins[1].semivariance, 2.25, 1e-12);
    EXPECT_EQ(ev.bins[1].pair_count, 6u);
    EXPECT_EQ(ev.total_pairs(), 10u);
}

TEST(EmpiricalSemivariogram, MatchesPairEnumerationOracle)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto s = random_samples(rng, 2 + trial % 11, 10);
        const double width = trial % 2 ? 1.0 : 1.7;
        const auto ev = empirical_semivariogram(s, width);
        const auto oracle = testing::enumerate_semivariogram(s, width);
        ASSERT_EQ(ev.bins.size(), oracle.size());
        std::size_t i = 0;
        for (const auto& [_, b] : oracle) {
            EXPECT_NEAR(ev.bins[i].lag, b.lag(), 1e-9);
            EXPECT_NEAR(ev.bins[i].semivariance, b.semivariance(), 1e-9);
            EXPECT_EQ(ev.bins[i].pair_count, b.pairs);
            ++i;
        }
    }
}

TEST(EmpiricalSemivariogram, Invariances)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_samples(rng, 9, 12);
        const auto base = empirical_semivariogram(s, 1.0);

        for (std::size_t i = 1; i < base.bins.size(); ++i)
            EXPECT_LT(base.bins[i - 1].lag, base.bins[i].lag);

        auto shuffled = s;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        expect_same_bins(base, empirical_semivariogram(shuffled, 1.0), 1e-9);

        auto moved = s;
        for (auto& p : moved) {
            p.x += 37;
            p.y -= 5;
        }
        expect_same_bins(base, empirical_semivariogram(moved, 1.0), 1e-9);

        auto lifted = s;
        for (auto& p : lifted)
            p.z += 13.5;
        expect_same_bins(base, empirical_semivariogram(lifted, 1.0), 1e-9);

        auto scaled = s;
        for (auto& p : scaled)
            p.z *= 3.0;
        const auto sv = empirical_semivariogram(scaled, 1.0);
        ASSERT_EQ(sv.bins.size(), base.bins.size());
        for (std::size_t i = 0; i < sv.bins.size(); ++i)
            EXPECT_NEAR(sv.bins[i].semivariance, 9.0 * base.bins[i].semivariance, 1e-7);
    }
}

TEST(EmpiricalSemivariogram, NeedsTwoSamples)
{
    EXPECT_THROW(empirical_semivariogram(Samples{{0, 0, 1}}, 1.0), VariogramError);
    EXPECT_THROW(empirical_semivariogram(Samples{}, 1.0), VariogramError);
}

TEST(FitModel, ConstantBinsGiveThatNugget)
{
    EmpiricalVariogram<double> ev;
    ev.bins = {{1.0, 5.0, 3}, {2.0, 5.0, 8}, {3.5, 5.0, 1}};
    const auto m = fit_model(ev, ModelKind::nugget);
    EXPECT_EQ(m.kind, ModelKind::nugget);
    EXPECT_DOUBLE_EQ(m.nugget, 5.0);
}

TEST(FitModel, NuggetIsPairWeightedMean)
{
    EmpiricalVariogram<double> ev;
    ev.bins = {{1.0, 2.0, 1}, {2.0, 8.0, 3}};
    EXPECT_DOUBLE_EQ(fit_model(ev, ModelKind::nugget).nugget, 6.5);
}

TEST(FitModel, IdenticalValuesHitTheFloor)
{
    const Samples s{{0, 0, 42}, {1, 0, 42}, {0, 1, 42}};
    const auto ev = empirical_semivariogram(s, 1.0);
    const auto nugget = fit_model(ev, ModelKind::nugget);
    EXPECT_EQ(nugget.kind, ModelKind::nugget);
    EXPECT_EQ(nugget.nugget, kNuggetFloor<double>);
    EXPECT_GT(nugget.nugget, 0.0);

    const auto linear = fit_model(ev, ModelKind::linear);
    EXPECT_EQ(linear.nugget, kNuggetFloor<double>);
    EXPECT_EQ(linear.slope, 0.0);
}

TEST(FitModel, LinearThroughTwoBins)
{
    // Weighted least squares through (1, 2) and (2, 4) is exact: γ = 2h.
    EmpiricalVariogram<double> ev;
    ev.bins = {{1.0, 2.0, 4}, {2.0, 4.0, 4}};
    const auto m = fit_model(ev, ModelKind::linear);
    EXPECT_EQ(m.kind, ModelKind::linear);
    EXPECT_NEAR(m.nugget, 0.0, 1e-12);
    EXPECT_NEAR(m.slope, 2.0, 1e-12);
}

TEST(FitModel, LinearClampsNegativeParameters)
{
    // Decreasing bins would need a negative slope; the best nonnegative
    // fit is the weighted mean as a flat line.
    EmpiricalVariogram<double> ev;
    ev.bins = {{1.0, 6.0, 2}, {2.0, 4.0, 2}, {3.0, 2.0, 2}};
    const auto m = fit_model(ev, ModelKind::linear);
    EXPECT_NEAR(m.slope, 0.0, 1e-12);
    EXPECT_NEAR(m.nugget, 4.0, 1e-12);

    // A steep line through the origin region needs a negative intercept.
    ev.bins = {{1.0, 1.0, 1}, {2.0, 5.0, 1}, {3.0, 9.0, 1}};
    const auto steep = fit_model(ev, ModelKind::linear);
    EXPECT_GE(steep.nugget, 0.0);
    EXPECT_NEAR(steep.nugget, 0.0, 1e-12);
    EXPECT_NEAR(steep.slope, 38.0 / 14.0, 1e-12); // Σhγ / Σh²
}

TEST(FitModel, ExponentialRecoversSyntheticCurve)
{
    const auto truth = VariogramModel<double>::exponential(2.0, 30.0, 3.0);
    EmpiricalVariogram<double> ev;
    for (int i = 1; i <= 12; ++i)
        ev.bins.push_back({0.5 * i + 0.25, truth(0.5 * i + 0.25), 10});
    const auto m = fit_model(ev, ModelKind::exponential);
    EXPECT_EQ(m.kind, ModelKind::exponential);
    EXPECT_NEAR(m.nugget, 2.0, 1e-3);
    EXPECT_NEAR(m.sill, 30.0, 1e-2);
    EXPECT_NEAR(m.range, 3.0, 1e-3);
}

TEST(FitModel, ExponentialFallsBackToLinear)
{
    EmpiricalVariogram<double> two;
    two.bins = {{1.0, 2.0, 4}, {2.0, 4.0, 4}};
    EXPECT_EQ(fit_model(two, ModelKind::exponential).kind, ModelKind::linear);

    // A straight line has no finite range.
    EmpiricalVariogram<double> line;
    for (int i = 1; i <= 6; ++i)
        line.bins.push_back({double(i), 1.0 + 2.0 * i, 5});
    const auto m = fit_model(line, ModelKind::exponential);
    EXPECT_EQ(m.kind, ModelKind::linear);
    EXPECT_NEAR(m.slope, 2.0, 1e-9);
}

TEST(FitModel, EmptyVariogramThrows)
{
    EXPECT_THROW(fit_model(EmpiricalVariogram<double>{}, ModelKind::linear), VariogramError);
}

TEST(Evaluate, Conventions)
{
    EXPECT_EQ(evaluate(VariogramModel<double>::pure_nugget(3.0), 0.0), 0.0);
    EXPECT_EQ(evaluate(VariogramModel<double>::linear(1.0, 2.0), 0.0), 0.0);
    EXPECT_EQ(evaluate(VariogramModel<double>::exponential(1.0, 2.0, 3.0), 0.0), 0.0);
    EXPECT_DOUBLE_EQ(evaluate(VariogramModel<double>::pure_nugget(3.0), 2.5), 3.0);
    EXPECT_DOUBLE_EQ(evaluate(VariogramModel<double>::linear(1.0, 2.0), 3.0), 7.0);
    EXPECT_NEAR(evaluate(VariogramModel<double>::exponential(1.0, 2.0, 3.0), 3.0),
                1.0 + 2.0 * (1.0 - std::exp(-1.0)), 1e-15);
}

TEST(Evaluate, NondecreasingForNonnegativeParameters)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> p(0.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const VariogramModel<double> models[] = {
            VariogramModel<double>::pure_nugget(p(rng)),
            VariogramModel<double>::linear(p(rng), p(rng)),
            VariogramModel<double>::exponential(p(rng), p(rng), 0.1 + p(rng)),
        };
        for (const auto& m : models) {
            double prev = m(1e-9);
            for (double h = 0.05; h < 30; h += 0.05) {
                EXPECT_GE(m(h), prev);
                prev = m(h);
            }
        }
    }
}

TEST(ModelKind, NamesRoundTrip)
{
    for (auto k : {ModelKind::nugget, ModelKind::linear, ModelKind::exponential})
        EXPECT_EQ(parse_model_kind(to_string(k)), k);
    EXPECT_FALSE(parse_model_kind("spherical").has_value());
}

TEST(Variogram, FloatScalar)
{
    const std::vector<SamplePoint<float>> s{{0, 0, 100.f}, {1, 0, 104.f}};
    const auto ev = empirical_semivariogram(s, 1.5f);
    ASSERT_EQ(ev.bins.size(), 1u);
    EXPECT_FLOAT_EQ(ev.bins[0].semivariance, 8.f);
}

} // namespace
} // namespace kif
