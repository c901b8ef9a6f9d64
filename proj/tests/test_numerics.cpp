#include "hopfkit/numerics.hpp"
#include "hopfkit/pipelines.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hopfkit;
using namespace hopfkit::numerics;

namespace {

SystemSpec ode5() { return load_system(std::string(HOPFKIT_DATA_DIR) + "/ode5.json"); }

Eigen::Matrix2d test_matrix()
{
    Eigen::Matrix2d b;
    b << 0.6, 1.4, -0.4, 0.2;
    return b;
}

} // namespace

TEST(Numerics, DopriHarmonicOscillator)
{
    auto f = [](double, const Vec &x) {
        Vec d(2);
        d << x[1], -x[0];
        return d;
    };
    Vec x0(2);
    x0 << 1, 0;
    std::vector<double> times = {0.5, 1.0, 10.0, 20.0};
    auto xs = dopri(f, x0, 0, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
        EXPECT_NEAR(xs[i][0], std::cos(times[i]), 1e-10);
        EXPECT_NEAR(xs[i][1], -std::sin(times[i]), 1e-10);
    }
    EXPECT_THROW(dopri(f, x0, 0, {1.0, 0.5}), std::invalid_argument);
}

TEST(Numerics, DopriBudget)
{
    auto f = [](double, const Vec &x) { return Vec(x * x.squaredNorm()); };
    Vec x0(1);
    x0 << 1;
    // blows up at t = 1/2
    EXPECT_THROW(dopri(f, x0, 0, {1.0}), std::runtime_error);
}

TEST(Numerics, LogLogSlope)
{
    EXPECT_NEAR(loglog_slope({1, 2, 4}, {3, 12, 48}), 2.0, 1e-12);
    EXPECT_THROW(loglog_slope({1}, {1}), std::invalid_argument);
}

TEST(Numerics, NumericFieldSubstitutesParameters)
{
    auto spec = ode5();
    NumericField f(spec.generator('a').field, spec.vars, spec.parameter_values);
    Vec x(5);
    x << 0.5, 0.25, 0.1, 1, 0;
    Vec d = f(x);
    EXPECT_NEAR(d[0], 0.25, 1e-15);
    // Y' = -X/4 - X^3/2 - Y + V/20 + A C
    EXPECT_NEAR(d[1], -0.125 - 0.0625 - 0.25 + 0.005 + 0.1, 1e-15);
}

TEST(Numerics, FirstOrderAveragingSlope)
{
    auto rep = validate_averaging(ode5(), 1, AveragingMode::zero_mean, {50, 100, 200}, 10.0, 400);
    EXPECT_NEAR(rep.slope, -2.0, 0.35);
}

TEST(Numerics, FirstOrderFieldIsFrequencyFree)
{
    auto w = average_words(ode5(), AveragingMode::zero_mean, 1);
    auto f = transferred_field(w);
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.begin()->first, 0);
}

TEST(Numerics, ThirdOrderBeatsFirstOrder)
{
    auto spec = ode5();
    auto r1 = validate_averaging(spec, 1, AveragingMode::zero_mean, {100, 200}, 10.0, 400);
    auto r3 = validate_averaging(spec, 3, AveragingMode::zero_mean, {100, 200}, 10.0, 400);
    for (int i = 0; i < 2; ++i)
        EXPECT_LT(r3.points[i].max_error * 100, r1.points[i].max_error);
}

TEST(Numerics, StroboscopicTimesBeatMidPeriod)
{
    // without the change of variables, the stroboscopic averaged solution
    // matches the full one at t = 2 pi k / w, not in between
    auto spec = ode5();
    const double w = 100;
    auto avg = average_words(spec, AveragingMode::stroboscopic, 3);
    std::vector<std::pair<int, NumericField>> forcing, averaged;
    for (const auto &g : spec.generators)
        forcing.emplace_back(g.harmonic, NumericField(g.field, spec.vars, spec.parameter_values));
    for (const auto &[k, f] : transferred_field(avg))
        averaged.emplace_back(k, NumericField(f, spec.vars, spec.parameter_values));
    std::vector<double> strobe, mid, times;
    const double period = 2 * M_PI / w;
    for (int k = 1; k <= 50; ++k) {
        times.push_back((k - 0.5) * period);
        times.push_back(k * period);
    }
    Vec x0(5);
    x0 << 0.5, 0, 0, 1, 0;
    auto full = dopri(
        [&](double t, const Vec &x) {
            Vec d = Vec::Zero(5);
            for (const auto &[k, f] : forcing)
                d += std::cos(k * w * t) * f(x);
            return d;
        },
        x0, 0, times);
    auto bar = dopri(
        [&](double, const Vec &x) {
            Vec d = Vec::Zero(5);
            for (const auto &[k, f] : averaged)
                d += std::pow(w, k) * f(x);
            return d;
        },
        x0, 0, times);
    double e_strobe = 0, e_mid = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        double e = (full[i] - bar[i]).lpNorm<Eigen::Infinity>();
        (i % 2 ? e_strobe : e_mid) = std::max(i % 2 ? e_strobe : e_mid, e);
    }
    EXPECT_LT(e_strobe * 100, e_mid);
}

TEST(Numerics, StrangFirstDegreeLocalOrder)
{
    auto s = strang_local_error(test_matrix(), 10.0, 1, {1e-2, 5e-3, 2e-3, 1e-3});
    EXPECT_NEAR(s.slope, 3.0, 0.3);
}

TEST(Numerics, StrangSecondDegreeLocalOrder)
{
    // symmetric splitting: the first neglected terms, of degree three, enter
    // the exponent at tau^5
    auto s = strang_local_error(test_matrix(), 10.0, 2, {1e-2, 5e-3, 2e-3, 1e-3});
    EXPECT_NEAR(s.slope, 5.0, 0.3);
    auto s1 = strang_local_error(test_matrix(), 10.0, 1, {1e-2, 5e-3});
    EXPECT_LT(s.errors[0] * 1000, s1.errors[0]);
}
