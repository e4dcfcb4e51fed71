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

#ifndef WINDCERT_EXTENSION_HPP
#define WINDCERT_EXTENSION_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "windcert/spectral.hpp"

namespace windcert {

enum class Verdict { Holomorphic, MeromorphicAtMost, NotWithinBudget };

std::string_view to_string(Verdict v) noexcept;

struct PoleEstimate {
    Complex location;
    int multiplicity = 1;
};

struct ExtensionReport {
    Verdict verdict = Verdict::NotWithinBudget;
    /// Pole bound carried by MeromorphicAtMost (the numerical Hankel rank).
    int pole_bound = 0;
    double negative_energy = 0.0;  ///< sum_{k<0} |c_k|^2
    double total_energy = 0.0;
    std::vector<double> hankel_singular_values;  ///< descending
    std::vector<PoleEstimate> pole_estimates;    ///< all strictly inside the disc
    int pole_count = 0;
};

/// P/Q with the normalization Q(0) = 1.
struct RationalFunction {
    Polynomial num;
    Polynomial den{1.0};

    int degree() const noexcept { return std::max(num.degree(), den.degree()); }
    Complex operator()(Complex z) const { return num(z) / den(z); }
    BoundaryFunction on_grid(const CircleGrid& grid) const;
};

struct RationalFit {
    RationalFunction model;
    double residual = 0.0;  ///< ||Q u - P v||_2 / ||u||_2
    int degree = 0;         ///< smallest degree that met the threshold
};

inline constexpr double kDefaultHolomorphicTolerance = 1e-8;
inline constexpr double kDefaultRankTolerance = 1e-8;
inline constexpr double kRankGapRatio = 0.1;
inline constexpr int kMaxHankelSize = 64;
inline constexpr double kRationalResidualTolerance = 1e-8;

/// Vanishing-negative-coefficient test: true iff sum_{k<0}|c_k|^2 <= tol^2 * energy.
std::pair<bool, ExtensionReport> holomorphic_test(const BoundaryFunction& f,
                                                  double tol = kDefaultHolomorphicTolerance);

/// Hankel-rank test for a meromorphic extension with at most `budget` poles.
///
/// H_{ij} = c_{-(i+j-1)} (1-based) of size K = min(64, M). The numerical rank
/// r counts singular values above tol * sigma_1. Poles come from the shift
/// invariance of the dominant r-dimensional left singular subspace.
/// Throws RankUnstable when sigma_{r+1} / sigma_r > 0.1.
ExtensionReport meromorphic_test(const BoundaryFunction& f, int budget, double tol = kDefaultRankTolerance);

/// Least-squares fit Q f ~ P on the grid with deg P, deg Q <= max_degree and
/// Q(0) = 1. Degrees are tried from 0 upward and the first one whose residual
/// is <= 1e-8 is returned. Throws NoRationalModel or DegenerateFit.
RationalFit rational_recover(const BoundaryFunction& f, int max_degree);

/// Same fit for a quotient given by samples: Q * numer ~ P * denom.
RationalFit rational_recover_ratio(const BoundaryFunction& numer, const BoundaryFunction& denom, int max_degree);

/// Roots of r.den strictly inside the disc (|z| < 1 - 1e-9), merged into
/// clusters of radius 1e-7. Throws RootFindingFailed.
std::vector<PoleEstimate> pole_locations(const RationalFunction& r);

/// Roots of p inside |z| < 1 - 1e-9, clustered with radius `cluster_radius`.
std::vector<PoleEstimate> roots_inside(const Polynomial& p, double cluster_radius = 1e-7);

/// Greedy clustering: each point joins the first cluster whose centre is within `radius`.
std::vector<PoleEstimate> cluster_points(std::span<const Complex> points, double radius);

int total_multiplicity(std::span<const PoleEstimate> poles) noexcept;

}  // namespace windcert

#endif  // WINDCERT_EXTENSION_HPP
