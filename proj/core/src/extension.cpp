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

#include "windcert/extension.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "windcert/error.hpp"

namespace windcert {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Holomorphic: return "holomorphic";
        case Verdict::MeromorphicAtMost: return "meromorphic";
        case Verdict::NotWithinBudget: return "not_within_budget";
    }
    return "?";
}

BoundaryFunction RationalFunction::on_grid(const CircleGrid& grid) const {
    return BoundaryFunction::sample(grid, [this](Complex z) { return (*this)(z); });
}

int total_multiplicity(std::span<const PoleEstimate> poles) noexcept {
    int n = 0;
    for (const auto& p : poles) n += p.multiplicity;
    return n;
}

std::vector<PoleEstimate> cluster_points(std::span<const Complex> points, double radius) {
    std::vector<PoleEstimate> clusters;
    std::vector<Complex> sums;
    for (const Complex p : points) {
        bool placed = false;
        for (std::size_t c = 0; c < clusters.size(); ++c) {
            if (std::abs(p - clusters[c].location) <= radius) {
                sums[c] += p;
                ++clusters[c].multiplicity;
                clusters[c].location = sums[c] / static_cast<double>(clusters[c].multiplicity);
                placed = true;
                break;
            }
        }
        if (!placed) {
            clusters.push_back({p, 1});
            sums.push_back(p);
        }
    }
    return clusters;
}

std::vector<PoleEstimate> roots_inside(const Polynomial& p, double cluster_radius) {
    std::vector<Complex> inside;
    for (const Complex r : roots(p)) {
        if (std::abs(r) < 1.0 - 1e-9) inside.push_back(r);
    }
    return cluster_points(inside, cluster_radius);
}

std::vector<PoleEstimate> pole_locations(const RationalFunction& r) {
    if (r.den.is_zero()) throw Error(ErrorCode::BadParams, "zero denominator");
    return roots_inside(r.den, 1e-7);
}

// ------------------------------------------------------------ energy tests

std::pair<bool, ExtensionReport> holomorphic_test(const BoundaryFunction& f, double tol) {
    const FourierSeries s = analyze(f);
    ExtensionReport report;
    report.negative_energy = s.negative_energy();
    report.total_energy = s.energy();
    const bool ok = report.negative_energy <= tol * tol * report.total_energy;
    report.verdict = ok ? Verdict::Holomorphic : Verdict::NotWithinBudget;
    return {ok, report};
}

ExtensionReport meromorphic_test(const BoundaryFunction& f, int budget, double tol) {
    if (budget < 0) throw Error(ErrorCode::BadParams, "pole budget must be nonnegative");
    const FourierSeries s = analyze(f);
    ExtensionReport report;
    report.negative_energy = s.negative_energy();
    report.total_energy = s.energy();
    if (report.negative_energy <= tol * tol * report.total_energy) {
        report.verdict = Verdict::Holomorphic;
        return report;
    }

    const FourierSeries clean = s.floored(kCoefficientFloor);
    const int K = std::min(kMaxHankelSize, clean.order());
    Eigen::MatrixXcd H(K, K);
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) H(i, j) = clean.coeff(-(i + j + 1));
    }
    if (H.norm() == 0.0) {
        report.verdict = Verdict::Holomorphic;
        return report;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(H, Eigen::ComputeFullU);
    const auto& sigma = svd.singularValues();
    report.hankel_singular_values.assign(sigma.data(), sigma.data() + sigma.size());
    int rank = 0;
    while (rank < K && sigma(rank) > tol * sigma(0)) ++rank;

    if (rank >= K) {
        // Full numerical rank: no finite-rank structure at this size.
        report.verdict = Verdict::NotWithinBudget;
        return report;
    }
    const double gap = sigma(rank) / sigma(rank - 1);
    if (gap > kRankGapRatio) {
        throw Error(ErrorCode::RankUnstable, "sigma_" + std::to_string(rank + 1) + "/sigma_" + std::to_string(rank) +
                                                 " = " + std::to_string(gap));
    }

    // Columns of H lie in span{(1, p, p^2, ...)}; the shift of that span
    // by one row multiplies each direction by its pole.
    const Eigen::MatrixXcd U = svd.matrixU().leftCols(rank);
    const Eigen::MatrixXcd upper = U.topRows(K - 1);
    const Eigen::MatrixXcd lower = U.bottomRows(K - 1);
    const Eigen::MatrixXcd shift = upper.completeOrthogonalDecomposition().solve(lower);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(shift, false);
    if (eig.info() != Eigen::Success) throw Error(ErrorCode::RootFindingFailed, "shift-operator eigenvalues");

    std::vector<Complex> inside;
    bool all_inside = true;
    for (int i = 0; i < rank; ++i) {
        const Complex p = eig.eigenvalues()(i);
        if (std::abs(p) < 1.0 - 1e-9) {
            inside.push_back(p);
        } else {
            all_inside = false;
        }
    }
    report.pole_estimates = cluster_points(inside, 1e-6);
    report.pole_count = total_multiplicity(report.pole_estimates);
    report.pole_bound = rank;
    report.verdict = (all_inside && rank <= budget) ? Verdict::MeromorphicAtMost : Verdict::NotWithinBudget;
    return report;
}

// --------------------------------------------------------- rational fitting

namespace {

struct LinearFit {
    Polynomial num;
    Polynomial den;
    double residual;
    bool rank_deficient;
};

double l2(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex c : v) s += std::norm(c);
    return std::sqrt(s);
}

LinearFit fit_at_degree(const CircleGrid& grid, std::span<const Complex> u, std::span<const Complex> v, int d) {
    const std::size_t n = grid.size();
    const int cols = 2 * d + 1;
    Eigen::MatrixXcd A(static_cast<Eigen::Index>(n), cols);
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const Complex z = grid.node(j);
        Complex zk = 1.0;
        const auto row = static_cast<Eigen::Index>(j);
        for (int k = 0; k <= d; ++k) {
            if (k >= 1) A(row, k - 1) = u[j] * zk;  // q_k
            A(row, d + k) = -v[j] * zk;            // p_k
            zk *= z;
        }
        rhs(row) = -u[j];
    }
    Eigen::VectorXd scale(cols);
    for (int c = 0; c < cols; ++c) {
        const double nrm = A.col(c).norm();
        scale(c) = nrm > 0.0 ? nrm : 1.0;
        A.col(c) /= scale(c);
    }
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
    cod.setThreshold(1e-11);
    cod.compute(A);
    Eigen::VectorXcd x = cod.solve(rhs);
    for (int c = 0; c < cols; ++c) x(c) /= scale(c);

    std::vector<Complex> q(static_cast<std::size_t>(d) + 1), p(static_cast<std::size_t>(d) + 1);
    q[0] = 1.0;
    for (int k = 1; k <= d; ++k) q[static_cast<std::size_t>(k)] = x(k - 1);
    for (int k = 0; k <= d; ++k) p[static_cast<std::size_t>(k)] = x(d + k);

    LinearFit fit{Polynomial(p), Polynomial(q), 0.0, cod.rank() < cols};
    std::vector<Complex> r(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex z = grid.node(j);
        r[j] = fit.den(z) * u[j] - fit.num(z) * v[j];
    }
    fit.residual = l2(r) / l2(u);
    return fit;
}

RationalFit fit_ratio(const CircleGrid& grid, std::span<const Complex> u, std::span<const Complex> v,
                      int max_degree) {
    if (max_degree < 0) throw Error(ErrorCode::BadParams, "degree bound must be nonnegative");
    if (l2(u) == 0.0) return RationalFit{RationalFunction{}, 0.0, 0};

    double best = std::numeric_limits<double>::infinity();
    for (int d = 0; d <= max_degree; ++d) {
        LinearFit fit = fit_at_degree(grid, u, v, d);
        best = std::min(best, fit.residual);
        if (fit.residual > kRationalResidualTolerance) continue;
        if (fit.rank_deficient) {
            // Perturb the data once; a structural degeneracy survives it.
            std::mt19937_64 rng(0x5eed);
            std::normal_distribution<double> noise;
            const double amp = 1e-10 * l2(u) / std::sqrt(static_cast<double>(u.size()));
            std::vector<Complex> up(u.begin(), u.end());
            for (Complex& c : up) c += amp * Complex(noise(rng), noise(rng));
            fit = fit_at_degree(grid, up, v, d);
            if (fit.rank_deficient) {
                throw Error(ErrorCode::DegenerateFit, "rank-deficient normal equations at degree " +
                                                          std::to_string(d));
            }
        }
        return RationalFit{RationalFunction{fit.num, fit.den}, fit.residual, d};
    }
    throw Error(ErrorCode::NoRationalModel, "best residual " + std::to_string(best) + " up to degree " +
                                                std::to_string(max_degree));
}

}  // namespace

RationalFit rational_recover(const BoundaryFunction& f, int max_degree) {
    const std::vector<Complex> ones(f.size(), Complex{1.0});
    return fit_ratio(f.grid(), f.values(), ones, max_degree);
}

RationalFit rational_recover_ratio(const BoundaryFunction& numer, const BoundaryFunction& denom, int max_degree) {
    if (!(numer.grid() == denom.grid())) throw Error(ErrorCode::InvalidSamples, "grid mismatch");
    return fit_ratio(numer.grid(), numer.values(), denom.values(), max_degree);
}

}  // namespace windcert
