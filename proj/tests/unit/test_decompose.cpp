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

#include "generators.hpp"
#include "windcert/decompose.hpp"
#include "windcert/error.hpp"
#include "windcert/winding.hpp"

namespace windcert {
namespace {

using testing::Gen;

BoundaryFunction sampled(const std::function<Complex(Complex)>& fn, std::size_t n = 2048) {
    return BoundaryFunction::sample(CircleGrid(n), fn);
}

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::BadParams;
}

void expect_poly_near(const Polynomial& p, const Polynomial& q, double tol) {
    for (int k = 0; k <= std::max(p.degree(), q.degree()); ++k) {
        EXPECT_NEAR(std::abs(p.coeff(k) - q.coeff(k)), 0.0, tol) << "k=" << k;
    }
}

ZeroFactorSet boundary_nodes(std::initializer_list<std::pair<Complex, int>> pts) {
    ZeroFactorSet zf;
    for (auto [a, m] : pts) zf.add(a, m, Location::Boundary);
    return zf;
}

TEST(Jet, SquareAtOne) {
    auto jet = jet_at_point(sampled([](Complex z) { return z * z; }), 1.0, 2);
    expect_poly_near(jet.polynomial, Polynomial{-1.0, 2.0}, 1e-12);
    for (auto v : jet.remainder.values()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
}

TEST(Jet, ConjugateAtOne) {
    auto jet = jet_at_point(sampled([](Complex z) { return std::conj(z); }), 1.0, 1);
    expect_poly_near(jet.polynomial, Polynomial{1.0}, 1e-12);
    for (std::size_t j = 0; j < jet.remainder.size(); ++j) {
        EXPECT_NEAR(std::abs(jet.remainder[j] + std::conj(jet.remainder.grid().node(j))), 0.0, 1e-12);
    }
}

TEST(Jet, ConstantHasZeroRemainder) {
    auto jet = jet_at_point(sampled([](Complex) { return Complex(2.0, 3.0); }), Complex(0.6, 0.8), 1);
    expect_poly_near(jet.polynomial, Polynomial{Complex(2.0, 3.0)}, 1e-12);
    EXPECT_LT(jet.remainder.max_modulus(), 1e-12);
}

TEST(Jet, TaylorDataMatchesBinomialOracle) {
    // For f = sum_m c_m z^m the Taylor coefficients at a are sum_m c_m binom(m,k) a^{m-k}.
    Gen gen(21);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> c(12);
        for (std::size_t m = 0; m < c.size(); ++m) c[m] = gen.normal() * std::pow(0.6, static_cast<double>(m));
        Polynomial f(c);
        const Complex a = gen.on_circle();
        const int n = gen.integer(1, 5);
        auto jet = jet_at_point(poly_eval_on_grid(f, CircleGrid(256)), a, n);
        for (int k = 0; k < n; ++k) {
            Complex oracle{};
            for (int m = k; m < static_cast<int>(c.size()); ++m) {
                double binom = 1.0;
                for (int i = 0; i < k; ++i) binom = binom * (m - i) / (i + 1);
                oracle += c[static_cast<std::size_t>(m)] * binom * std::pow(a, m - k);
            }
            EXPECT_NEAR(std::abs(jet.taylor[static_cast<std::size_t>(k)] - oracle), 0.0, 1e-10) << trial << " " << k;
        }
    }
}

TEST(Jet, Errors) {
    auto f = sampled([](Complex z) { return z; });
    EXPECT_EQ(code_of([&] { jet_at_point(f, 0.5, 1); }), ErrorCode::NodeOffCircle);
    EXPECT_EQ(code_of([&] { jet_at_point(f, 1.0, 0); }), ErrorCode::BadParams);
    std::vector<Complex> rough(256);
    Gen gen(1);
    for (auto& v : rough) v = gen.normal();
    EXPECT_EQ(code_of([&] { jet_at_point(BoundaryFunction(CircleGrid(256), rough), 1.0, 1); }),
              ErrorCode::InsufficientSmoothness);
}

TEST(NewtonDecompose, DoubleNode) {
    auto d = newton_decompose(sampled([](Complex z) { return z * z; }), boundary_nodes({{1.0, 2}}));
    ASSERT_EQ(d.coeffs.size(), 2u);
    EXPECT_NEAR(std::abs(d.coeffs[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(d.coeffs[1] - 2.0), 0.0, 1e-12);
    for (auto v : d.remainder.values()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
}

TEST(NewtonDecompose, DividedDifference) {
    auto d = newton_decompose(sampled([](Complex z) { return z * z; }), boundary_nodes({{1.0, 1}, {-1.0, 1}}));
    ASSERT_EQ(d.coeffs.size(), 2u);
    EXPECT_NEAR(std::abs(d.coeffs[0] - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(d.coeffs[1]), 0.0, 1e-12);
    for (auto v : d.remainder.values()) EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
}

TEST(NewtonDecompose, EmptyNodes) {
    auto f = sampled([](Complex z) { return std::exp(z) + 0.3 * std::conj(z); });
    auto d = newton_decompose(f, ZeroFactorSet{});
    EXPECT_TRUE(d.jet_polynomial.is_zero());
    EXPECT_EQ(testing::sup_distance(d.remainder, f), 0.0);
}

TEST(NewtonDecompose, RejectsInteriorNodes) {
    ZeroFactorSet zf;
    zf.add(0.5, 1, Location::Inside);
    EXPECT_THROW(newton_decompose(sampled([](Complex z) { return z; }), zf), Error);
}

TEST(NewtonDecompose, RandomReconstruction) {
    Gen gen(404);
    CircleGrid grid(1024);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = synthesize(gen.band_limited(511, 40, 0.6), grid);
        ZeroFactorSet zf;
        int budget = gen.integer(1, 6);
        while (budget > 0) {
            int m = gen.integer(1, budget);
            zf.add(gen.on_circle(), m, Location::Boundary);
            budget -= m;
        }
        auto d = newton_decompose(f, zf);
        EXPECT_LE(d.jet_polynomial.degree(), zf.total_multiplicity() - 1);
        auto rebuilt = poly_eval_on_grid(d.jet_polynomial, grid) + poly_eval_on_grid(node_product(zf), grid) * d.remainder;
        EXPECT_LE(testing::sup_distance(rebuilt, f), 1e-8 * f.max_modulus()) << trial;
    }
}

TEST(NewtonDecompose, SingleNodeAgreesWithJet) {
    Gen gen(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto f = synthesize(gen.band_limited(255, 30), CircleGrid(512));
        Complex a = gen.on_circle();
        auto jet = jet_at_point(f, a, 4);
        auto d = newton_decompose(f, boundary_nodes({{a, 4}}));
        expect_poly_near(jet.polynomial, d.jet_polynomial, 1e-9);
    }
}

TEST(RieszSplit, Examples) {
    auto s = analyze(sampled([](Complex z) { return z + std::conj(z); }, 64));
    auto split = riesz_split(s);
    EXPECT_NEAR(std::abs(split.analytic.coeff(1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(split.conjugate.coeff(1) - 1.0), 0.0, 1e-15);
    EXPECT_EQ(split.conjugate.coeff(0), Complex{});

    auto analytic = riesz_split(analyze(sampled([](Complex z) { return z * z + 1.0; }, 64)));
    EXPECT_LT(analytic.conjugate.max_coeff(), 1e-15);

    auto neg = riesz_split(analyze(sampled([](Complex z) { return Complex(0.0, 1.0) / (z * z); }, 64)));
    EXPECT_LT(neg.analytic.max_coeff(), 1e-15);
    EXPECT_NEAR(std::abs(neg.conjugate.coeff(2) - Complex(0.0, -1.0)), 0.0, 1e-15);
}

TEST(RieszSplit, RecombineIsBitExact) {
    Gen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = gen.band_limited(64, 64, 1.0);
        auto back = recombine(riesz_split(s));
        for (int k = -64; k <= 64; ++k) ASSERT_EQ(back.coeff(k), s.coeff(k));
    }
}

TEST(Factorize, Examples) {
    auto z = factorize_nonvanishing(sampled([](Complex w) { return w; }), 1e-9);
    EXPECT_EQ(z.winding, 1);
    EXPECT_NEAR(std::abs(z.outer.coeff(0) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(z.conjugate.coeff(0) - 1.0), 0.0, 1e-12);
    EXPECT_LT(z.outer.with_order(z.outer.order()).max_coeff(), 1.0 + 1e-12);

    auto f = factorize_nonvanishing(sampled([](Complex w) { return 2.0 + w; }), 1e-9);
    EXPECT_EQ(f.winding, 0);
    EXPECT_NEAR(std::abs(f.outer.coeff(0) - 2.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(f.outer.coeff(1) - 1.0), 0.0, 1e-12);
    EXPECT_LT(std::abs(f.outer.coeff(2)), 1e-12);
    EXPECT_NEAR(std::abs(f.conjugate.coeff(0) - 1.0), 0.0, 1e-12);
    EXPECT_LT(std::abs(f.conjugate.coeff(1)), 1e-12);

    // |2+z|^2 / z: the constant 2 moves into F because G(0) = 1.
    auto h = factorize_nonvanishing(
        sampled([](Complex w) { return (2.0 + w) * std::conj(2.0 + w) / w; }), 1e-9);
    EXPECT_EQ(h.winding, -1);
    EXPECT_NEAR(std::abs(h.outer.coeff(0) - 4.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(h.outer.coeff(1) - 2.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(h.conjugate.coeff(0) - 1.0), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(h.conjugate.coeff(1) - 0.5), 0.0, 1e-12);
}

TEST(Factorize, RandomReconstructionAndCertificates) {
    Gen gen(808);
    CircleGrid grid(2048);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen.integer(-3, 3);
        auto s = gen.band_limited(1023, 6, 0.5);
        auto g = sampled([&](Complex z) { return std::pow(z, n) * std::exp(s.evaluate(z)); });
        auto fac = factorize_nonvanishing(g, default_delta(g));
        EXPECT_EQ(fac.winding, n);
        EXPECT_EQ(fac.outer_winding, 0);
        EXPECT_EQ(fac.conjugate_winding, 0);
        auto F = synthesize(fac.outer, grid);
        auto G = synthesize(fac.conjugate, grid);
        auto rebuilt = F * G.conj() * BoundaryFunction::sample(grid, [n](Complex z) { return std::pow(z, n); });
        EXPECT_LE(testing::sup_distance(rebuilt, g), 1e-9 * g.max_modulus()) << trial;
    }
}

TEST(Factorize, ZeroOnBoundary) {
    auto g = sampled([](Complex z) { return z - 1.0; });
    EXPECT_EQ(code_of([&] { factorize_nonvanishing(g, 1e-9); }), ErrorCode::ZeroOnBoundary);
}

}  // namespace
}  // namespace windcert
