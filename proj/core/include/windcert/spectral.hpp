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

#ifndef WINDCERT_SPECTRAL_HPP
#define WINDCERT_SPECTRAL_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "windcert/polynomial.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {

/// Uniform grid of n nodes e^{i theta_k}, theta_k = 2 pi k / n, on the unit circle.
class CircleGrid {
public:
    static constexpr std::size_t kMinSize = 64;
    static constexpr std::size_t kDefaultSize = 2048;

    /// Throws InvalidGrid unless n >= 64 and n is a power of two.
    explicit CircleGrid(std::size_t n = kDefaultSize);

    static bool is_valid_size(std::size_t n) noexcept;

    std::size_t size() const noexcept { return n_; }
    double angle(std::size_t k) const noexcept;
    Complex node(std::size_t k) const noexcept;
    CircleGrid refined(std::size_t factor) const { return CircleGrid(n_ * factor); }

    friend bool operator==(const CircleGrid&, const CircleGrid&) = default;

private:
    std::size_t n_;
};

/// Complex samples of a function on a CircleGrid. Immutable once built.
class BoundaryFunction {
public:
    /// Throws InvalidSamples if the size does not match or any value is not finite.
    BoundaryFunction(CircleGrid grid, std::vector<Complex> values);

    /// Samples `fn(z)` at every node z of `grid`.
    static BoundaryFunction sample(const CircleGrid& grid, const std::function<Complex(Complex)>& fn);

    const CircleGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Complex> values() const noexcept { return values_; }
    Complex operator[](std::size_t k) const noexcept { return values_[k]; }

    double max_modulus() const noexcept;
    double min_modulus() const noexcept;

    BoundaryFunction conj() const;
    BoundaryFunction reciprocal() const;
    BoundaryFunction operator*(const BoundaryFunction& rhs) const;
    BoundaryFunction operator+(const BoundaryFunction& rhs) const;
    BoundaryFunction operator-(const BoundaryFunction& rhs) const;
    BoundaryFunction operator*(Complex s) const;
    BoundaryFunction operator+(Complex s) const;

private:
    CircleGrid grid_;
    std::vector<Complex> values_;
};

/// Truncated Laurent series sum_{k=-M}^{M} c_k z^k on the unit circle.
class FourierSeries {
public:
    FourierSeries() = default;
    /// `coeffs` holds c_{-M}, ..., c_{M}; its size must be 2M+1.
    FourierSeries(int order, std::vector<Complex> coeffs);
    static FourierSeries zero(int order);

    int order() const noexcept { return order_; }
    /// c_k, zero when |k| > M.
    Complex coeff(int k) const noexcept;
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Modes k >= 0 only.
    FourierSeries analytic_part() const;
    /// Modes k < 0 only.
    FourierSeries antianalytic_part() const;

    double energy() const noexcept;
    /// sum_{k<0} |c_k|^2
    double negative_energy() const noexcept;
    double max_coeff() const noexcept;
    /// Energy in modes with |k| > 0.9 M, used as a resolution proxy.
    double top_decile_energy() const noexcept;

    /// Zero every coefficient below `rel` times the largest coefficient.
    FourierSeries floored(double rel) const;
    FourierSeries with_order(int order) const;
    FourierSeries conj_reflected() const;  ///< coefficients of conj(f): c'_k = conj(c_{-k})

    Complex evaluate(Complex z) const noexcept;
    /// Analytic part as a polynomial of degree <= M.
    Polynomial analytic_polynomial() const;

    friend FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);

private:
    int order_ = 0;
    std::vector<Complex> coeffs_{Complex{}};
};

/// Coefficient floor used when deciding whether a mode is present.
inline constexpr double kCoefficientFloor = 1e-13;

/// c_k = (1/n) sum_j f(theta_j) e^{-ik theta_j} for |k| <= n/2 - 1.
FourierSeries analyze(const BoundaryFunction& f);

/// Sum the series at the grid nodes. Throws TruncationMismatch if M > n/2.
BoundaryFunction synthesize(const FourierSeries& s, const CircleGrid& grid);

BoundaryFunction poly_eval_on_grid(const Polynomial& p, const CircleGrid& grid);

/// Monic polynomial prod (z - a_j)^{m_j} over the factor set.
Polynomial node_product(const ZeroFactorSet& factors);

/// Polynomial A with A(z) = z^N conj(D(z)) on the unit circle, i.e. coefficient
/// d_k moves to degree N - k conjugated. Throws DegreeTooHigh if deg D > N.
Polynomial conjugate_reflect(const Polynomial& d, int degree_bound);

/// Band-limited (trigonometric) interpolation onto a grid `factor` times finer.
BoundaryFunction resample(const BoundaryFunction& f, std::size_t factor);

/// Trigonometric interpolation of `values` given at m uniform nodes
/// theta_0 + 2 pi k / m onto `grid`. Bandwidth above grid.n/2 is dropped.
BoundaryFunction interpolate_uniform(std::span<const Complex> values, double theta0, const CircleGrid& grid);

/// d/dtheta of f, computed spectrally.
BoundaryFunction angular_derivative(const BoundaryFunction& f);

}  // namespace windcert

#endif  // WINDCERT_SPECTRAL_HPP
