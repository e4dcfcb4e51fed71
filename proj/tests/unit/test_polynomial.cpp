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

#include <algorithm>

#include "generators.hpp"
#include "windcert/error.hpp"
#include "windcert/polynomial.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {
namespace {

TEST(Polynomial, TrimsNegligibleLeadingTerms) {
    Polynomial p{1.0, 2.0, 1e-14};
    EXPECT_EQ(p.degree(), 1);
    EXPECT_EQ(Polynomial{}.degree(), -1);
    EXPECT_TRUE(Polynomial({0.0, 0.0}).is_zero());
}

TEST(Polynomial, HornerAndArithmetic) {
    Polynomial p{-1.0, 1.0};  // z - 1
    Polynomial q = p * p;
    EXPECT_EQ(q, Polynomial({1.0, -2.0, 1.0}));
    EXPECT_NEAR(std::abs(q(Complex(3.0, 0.0)) - 4.0), 0.0, 1e-15);
    EXPECT_EQ((q - q).degree(), -1);
}

TEST(Polynomial, DivmodReconstructs) {
    testing::Gen gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> a(7), b(3);
        for (auto& c : a) c = gen.normal();
        for (auto& c : b) c = gen.normal();
        Polynomial num(a), den(b);
        auto [quo, rem] = divmod(num, den);
        EXPECT_LT(rem.degree(), den.degree());
        Polynomial back = quo * den + rem;
        for (int k = 0; k <= 6; ++k) EXPECT_NEAR(std::abs(back.coeff(k) - num.coeff(k)), 0.0, 1e-12);
    }
}

TEST(Polynomial, NewtonFormMatchesProductExpansion) {
    // 1 + 2(z-1) + 3(z-1)(z+1) = 3z^2 + 2z - 4
    std::vector<Complex> c{1.0, 2.0, 3.0};
    std::vector<Complex> nodes{1.0, -1.0};
    Polynomial p = from_newton_form(c, nodes);
    EXPECT_EQ(p, Polynomial({-4.0, 2.0, 3.0}));
}

TEST(Polynomial, TaylorAtShiftsCentre) {
    Polynomial p{0.0, 0.0, 1.0};
    auto b = p.taylor_at(1.0);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_NEAR(std::abs(b[0] - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b[1] - 2.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(b[2] - 1.0), 0.0, 1e-15);
}

TEST(Polynomial, RootsRecoverConstruction) {
    testing::Gen gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Complex> r(static_cast<std::size_t>(gen.integer(1, 8)));
        for (auto& x : r) x = gen.in_annulus(0.1, 2.0);
        auto found = roots(Polynomial::from_roots(r));
        ASSERT_EQ(found.size(), r.size());
        for (const auto& x : r) {
            double best = 1e300;
            for (const auto& y : found) best = std::min(best, std::abs(x - y));
            EXPECT_LT(best, 1e-8);
        }
    }
}

TEST(Polynomial, RootsAtOriginAreExact) {
    auto found = roots(Polynomial({0.0, 0.0, -0.25, 1.0}));
    ASSERT_EQ(found.size(), 3u);
    EXPECT_EQ(std::count(found.begin(), found.end(), Complex{}), 2);
}

TEST(ZeroFactorSet, ClassifiesByModulus) {
    auto zf = ZeroFactorSet::classify({{0.5, 1}, {1.0, 2}, {Complex(0.0, 2.0), 1}});
    ASSERT_EQ(zf.factors().size(), 3u);
    EXPECT_EQ(zf.factors()[0].location, Location::Inside);
    EXPECT_EQ(zf.factors()[1].location, Location::Boundary);
    EXPECT_EQ(zf.factors()[2].location, Location::Outside);
    EXPECT_EQ(zf.total_multiplicity(), 4);
    EXPECT_EQ(zf.only(Location::Boundary).total_multiplicity(), 2);
}

TEST(ZeroFactorSet, RejectsInconsistentLocation) {
    ZeroFactorSet zf;
    EXPECT_THROW(zf.add(0.5, 1, Location::Boundary), Error);
    EXPECT_THROW(zf.add(1.0, 0, Location::Boundary), Error);
    EXPECT_NO_THROW(zf.add(1.0 + 5e-13, 1, Location::Boundary));
}

}  // namespace
}  // namespace windcert
