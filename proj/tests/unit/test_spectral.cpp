/*
   Copyright 2026 The windcert Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <numbers>

#include "generators.hpp"
#include "windcert/error.hpp"
#include "windcert/spectral.hpp"

namespace windcert {
namespace {

using testing::Gen;

TEST(CircleGrid, ValidatesSize) {
    EXPECT_THROW(CircleGrid(32), Error);
    EXPECT_THROW(CircleGrid(100), Error);
    EXPECT_NO_THROW(CircleGrid(64));
    CircleGrid g(64);
    EXPECT_NEAR(std::abs(g.node(16) - Complex(0.0, 1.0)), 0.0, 1e-15);
}

TEST(BoundaryFunction, RejectsBadSamples) {
    CircleGrid g(64);
    EXPECT_THROW(BoundaryFunction(g, std::vector<Complex>(63)), Error);
    std::vector<Complex> v(64, 1.0);
    v[3] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    EXPECT_THROW(BoundaryFunction(g, v), Error);
}

TEST(Analyze, Monomial) {
    auto f = BoundaryFunction::sample(CircleGrid(256), [](Complex z) { return z; });
    auto s = analyze(f);
    EXPECT_EQ(s.order(), 127);
    for (int k = -127; k <= 127; ++k) EXPECT_NEAR(std::abs(s.coeff(k) - (k == 1 ? 1.0 : 0.0)), 0.0, 1e-15);
}

TEST(Analyze, Constant) {
    auto s = analyze(BoundaryFunction::sample(CircleGrid(64), [](Complex) { return Complex(3.0); }));
    EXPECT_NEAR(std::abs(s.coeff(0) - 3.0), 0.0, 1e-15);
    EXPECT_NEAR(s.energy() - 9.0, 0.0, 1e-13);
}

TEST(Analyze, GeometricExpansionOfCounterexample) {
    auto f = BoundaryFunction::sample(CircleGrid(2048), [](Complex z) { return z / (z - 0.5); });
    auto s = analyze(f);
    for (int k = 0; k <= 60; ++k) EXPECT_NEAR(std::abs(s.coeff(-k) - std::pow(2.0, -k)), 0.0, 1e-12) << k;
    for (int k = 1; k <= 60; ++k) EXPECT_NEAR(std::abs(s.coeff(k)), 0.0, 1e-12) << k;
}

TEST(Synthesize, RoundTripAndParseval) {
    Gen gen(1);
    CircleGrid grid(512);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = gen.band_limited(255, 255, 1.0);
        auto f = synthesize(s, grid);
        auto back = analyze(f);
        double err = 0.0, scale = s.max_coeff();
        for (int k = -255; k <= 255; ++k) err = std::max(err, std::abs(back.coeff(k) - s.coeff(k)));
        EXPECT_LE(err, 1e-12 * scale);
        double samples = 0.0;
        for (auto v : f.values()) samples += std::norm(v);
        samples /= static_cast<double>(grid.size());
        EXPECT_NEAR(samples, s.energy(), 1e-12 * s.energy());
    }
}

TEST(Synthesize, MonomialSeriesAndOrderCheck) {
    std::vector<Complex> c(5);
    c[3] = 1.0;
    auto f = synthesize(FourierSeries(2, c), CircleGrid(64));
    for (std::size_t j = 0; j < 64; ++j) EXPECT_NEAR(std::abs(f[j] - f.grid().node(j)), 0.0, 1e-15);
    EXPECT_THROW(synthesize(FourierSeries::zero(40), CircleGrid(64)), Error);
    EXPECT_NO_THROW(synthesize(FourierSeries::zero(32), CircleGrid(64)));
}

TEST(PolyEvalOnGrid, Examples) {
    CircleGrid g(64);
    EXPECT_NEAR(std::abs(poly_eval_on_grid(Polynomial{-1.0, 1.0}, g)[0]), 0.0, 1e-15);
    auto one = poly_eval_on_grid(Polynomial{1.0}, g);
    for (auto v : one.values()) EXPECT_EQ(v, Complex(1.0));
    EXPECT_NEAR(std::abs(poly_eval_on_grid(Polynomial{-0.5, 1.0}, g)[32] - (-1.5)), 0.0, 1e-15);
}

TEST(NodeProduct, Examples) {
    ZeroFactorSet a;
    a.add(1.0, 1, Location::Boundary);
    EXPECT_EQ(node_product(a), Polynomial({-1.0, 1.0}));
    ZeroFactorSet b;
    b.add(1.0, 2, Location::Boundary);
    EXPECT_EQ(node_product(b), Polynomial({1.0, -2.0, 1.0}));
    ZeroFactorSet c;
    c.add(0.5, 1, Location::Inside);
    c.add(2.0, 1, Location::Outside);
    EXPECT_EQ(node_product(c), Polynomial({1.0, -2.5, 1.0}));
}

TEST(NodeProduct, VanishesAtRoots) {
    Gen gen(3);
    for (int trial = 0; trial < 30; ++trial) {
        ZeroFactorSet zf;
        for (int j = 0; j < 4; ++j) zf.add(gen.in_annulus(0.2, 1.8), gen.integer(1, 2));
        Polynomial p = node_product(zf);
        for (const auto& fac : zf.factors()) EXPECT_LE(std::abs(p(fac.point)), 1e-10 * p.max_coeff());
    }
}

TEST(ConjugateReflect, Examples) {
    EXPECT_EQ(conjugate_reflect(Polynomial{-1.0, 2.0}, 2), Polynomial({0.0, 2.0, -1.0}));
    EXPECT_EQ(conjugate_reflect(Polynomial{1.0}, 0), Polynomial({1.0}));
    EXPECT_EQ(conjugate_reflect(Polynomial{Complex(0.0, 1.0)}, 1), Polynomial({0.0, Complex(0.0, -1.0)}));
    EXPECT_THROW(conjugate_reflect(Polynomial{0.0, 0.0, 1.0}, 1), Error);
}

TEST(ConjugateReflect, InvolutionAndBoundaryIdentity) {
    Gen gen(4);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Complex> c(static_cast<std::size_t>(gen.integer(1, 6)));
        for (auto& x : c) x = gen.normal();
        Polynomial d(c);
        int n = d.degree() + gen.integer(0, 3);
        EXPECT_EQ(conjugate_reflect(conjugate_reflect(d, n), n), d);
        Complex z = gen.on_circle();
        EXPECT_NEAR(std::abs(conjugate_reflect(d, n)(z) - std::pow(z, n) * std::conj(d(z))), 0.0, 1e-12);
    }
}

TEST(Resample, ExactAtOriginalNodes) {
    Gen gen(8);
    CircleGrid grid(128);
    auto f = synthesize(gen.band_limited(63, 63, 1.0), grid);
    auto fine = resample(f, 4);
    ASSERT_EQ(fine.size(), 512u);
    for (std::size_t j = 0; j < 128; ++j) EXPECT_NEAR(std::abs(fine[4 * j] - f[j]), 0.0, 1e-12);
    auto z = resample(BoundaryFunction::sample(grid, [](Complex z) { return z; }), 2);
    for (std::size_t j = 0; j < 256; ++j) EXPECT_NEAR(std::abs(z[j] - z.grid().node(j)), 0.0, 1e-14);
    auto c = resample(BoundaryFunction::sample(grid, [](Complex) { return Complex(2.0, -1.0); }), 2);
    for (auto v : c.values()) EXPECT_NEAR(std::abs(v - Complex(2.0, -1.0)), 0.0, 1e-14);
}

TEST(InterpolateUniform, ShiftedNodes) {
    const int m = 100;
    const double theta0 = 0.3;
    std::vector<Complex> vals(m);
    auto fn = [](Complex z) { return z * z + 0.5 / z; };
    for (int k = 0; k < m; ++k) vals[k] = fn(std::polar(1.0, theta0 + 2.0 * std::numbers::pi * k / m));
    auto f = interpolate_uniform(vals, theta0, CircleGrid(64));
    for (std::size_t j = 0; j < 64; ++j) EXPECT_NEAR(std::abs(f[j] - fn(f.grid().node(j))), 0.0, 1e-12);
}

TEST(FourierSeries, PartsAndFloor) {
    std::vector<Complex> c{1.0, 2.0, 3.0, 1e-15, 5.0};
    FourierSeries s(2, c);
    EXPECT_EQ(s.analytic_part().coeff(-1), Complex{});
    EXPECT_EQ(s.analytic_part().coeff(2), Complex(5.0));
    EXPECT_EQ(s.antianalytic_part().coeff(0), Complex{});
    EXPECT_NEAR(s.negative_energy(), 5.0, 1e-15);
    EXPECT_EQ(s.floored(kCoefficientFloor).coeff(1), Complex{});
    EXPECT_EQ(s.conj_reflected().coeff(1), Complex(2.0));
}

}  // namespace
}  // namespace windcert
