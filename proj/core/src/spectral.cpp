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

#include "windcert/spectral.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "windcert/error.hpp"

namespace windcert {

namespace {

std::size_t bin_of(int k, std::size_t n) {
    const long long nn = static_cast<long long>(n);
    long long b = k % nn;
    if (b < 0) b += nn;
    return static_cast<std::size_t>(b);
}

}  // namespace

// ---------------------------------------------------------------- CircleGrid

CircleGrid::CircleGrid(std::size_t n) : n_(n) {
    if (!is_valid_size(n)) {
        throw Error(ErrorCode::InvalidGrid, "grid size must be a power of two >= 64, got " + std::to_string(n));
    }
}

bool CircleGrid::is_valid_size(std::size_t n) noexcept { return n >= kMinSize && std::has_single_bit(n); }

double CircleGrid::angle(std::size_t k) const noexcept {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n_);
}

Complex CircleGrid::node(std::size_t k) const noexcept { return std::polar(1.0, angle(k)); }

// ---------------------------------------------------------- BoundaryFunction

BoundaryFunction::BoundaryFunction(CircleGrid grid, std::vector<Complex> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw Error(ErrorCode::InvalidSamples, "expected " + std::to_string(grid_.size()) + " samples, got " +
                                                   std::to_string(values_.size()));
    }
    for (const Complex v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::InvalidSamples, "non-finite sample value");
        }
    }
}

BoundaryFunction BoundaryFunction::sample(const CircleGrid& grid, const std::function<Complex(Complex)>& fn) {
    std::vector<Complex> v(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) v[k] = fn(grid.node(k));
    return BoundaryFunction(grid, std::move(v));
}

double BoundaryFunction::max_modulus() const noexcept {
    double m = 0.0;
    for (const Complex v : values_) m = std::max(m, std::abs(v));
    return m;
}

double BoundaryFunction::min_modulus() const noexcept {
    double m = std::numeric_limits<double>::infinity();
    for (const Complex v : values_) m = std::min(m, std::abs(v));
    return m;
}

BoundaryFunction BoundaryFunction::conj() const {
    std::vector<Complex> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](Complex c) { return std::conj(c); });
    return BoundaryFunction(grid_, std::move(v));
}

BoundaryFunction BoundaryFunction::reciprocal() const {
    std::vector<Complex> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [](Complex c) { return 1.0 / c; });
    return BoundaryFunction(grid_, std::move(v));
}

BoundaryFunction BoundaryFunction::operator*(const BoundaryFunction& rhs) const {
    if (!(grid_ == rhs.grid_)) throw Error(ErrorCode::InvalidSamples, "grid mismatch in product");
    std::vector<Complex> v(values_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] * rhs.values_[k];
    return BoundaryFunction(grid_, std::move(v));
}

BoundaryFunction BoundaryFunction::operator+(const BoundaryFunction& rhs) const {
    if (!(grid_ == rhs.grid_)) throw Error(ErrorCode::InvalidSamples, "grid mismatch in sum");
    std::vector<Complex> v(values_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] + rhs.values_[k];
    return BoundaryFunction(grid_, std::move(v));
}

BoundaryFunction BoundaryFunction::operator-(const BoundaryFunction& rhs) const { return *this + rhs * -1.0; }

BoundaryFunction BoundaryFunction::operator*(Complex s) const {
    std::vector<Complex> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [s](Complex c) { return c * s; });
    return BoundaryFunction(grid_, std::move(v));
}

BoundaryFunction BoundaryFunction::operator+(Complex s) const {
    std::vector<Complex> v(values_.size());
    std::transform(values_.begin(), values_.end(), v.begin(), [s](Complex c) { return c + s; });
    return BoundaryFunction(grid_, std::move(v));
}

// ------------------------------------------------------------- FourierSeries

FourierSeries::FourierSeries(int order, std::vector<Complex> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0 || coeffs_.size() != static_cast<std::size_t>(2 * order + 1)) {
        throw Error(ErrorCode::BadParams, "Fourier series of order " + std::to_string(order) + " needs " +
                                              std::to_string(2 * order + 1) + " coefficients");
    }
}

FourierSeries FourierSeries::zero(int order) {
    return FourierSeries(order, std::vector<Complex>(static_cast<std::size_t>(2 * order + 1)));
}

Complex FourierSeries::coeff(int k) const noexcept {
    if (k < -order_ || k > order_) return Complex{};
    return coeffs_[static_cast<std::size_t>(k + order_)];
}

FourierSeries FourierSeries::analytic_part() const {
    std::vector<Complex> v = coeffs_;
    std::fill(v.begin(), v.begin() + order_, Complex{});
    return FourierSeries(order_, std::move(v));
}

FourierSeries FourierSeries::antianalytic_part() const {
    std::vector<Complex> v = coeffs_;
    std::fill(v.begin() + order_, v.end(), Complex{});
    return FourierSeries(order_, std::move(v));
}

double FourierSeries::energy() const noexcept {
    double e = 0.0;
    for (const Complex c : coeffs_) e += std::norm(c);
    return e;
}

double FourierSeries::negative_energy() const noexcept {
    double e = 0.0;
    for (int k = -order_; k < 0; ++k) e += std::norm(coeff(k));
    return e;
}

double FourierSeries::max_coeff() const noexcept {
    double m = 0.0;
    for (const Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

double FourierSeries::top_decile_energy() const noexcept {
    const int cut = static_cast<int>(std::floor(0.9 * order_));
    double e = 0.0;
    for (int k = cut + 1; k <= order_; ++k) e += std::norm(coeff(k)) + std::norm(coeff(-k));
    return e;
}

FourierSeries FourierSeries::floored(double rel) const {
    const double floor = rel * max_coeff();
    std::vector<Complex> v = coeffs_;
    for (Complex& c : v) {
        if (std::abs(c) < floor) c = Complex{};
    }
    return FourierSeries(order_, std::move(v));
}

FourierSeries FourierSeries::with_order(int order) const {
    FourierSeries out = zero(order);
    const int m = std::min(order, order_);
    for (int k = -m; k <= m; ++k) out.coeffs_[static_cast<std::size_t>(k + order)] = coeff(k);
    return out;
}

FourierSeries FourierSeries::conj_reflected() const {
    std::vector<Complex> v(coeffs_.size());
    for (int k = -order_; k <= order_; ++k) v[static_cast<std::size_t>(k + order_)] = std::conj(coeff(-k));
    return FourierSeries(order_, std::move(v));
}

Complex FourierSeries::evaluate(Complex z) const noexcept {
    Complex pos{};
    for (int k = order_; k >= 0; --k) pos = pos * z + coeff(k);
    const Complex w = 1.0 / z;
    Complex neg{};
    for (int k = order_; k >= 1; --k) neg = (neg + coeff(-k)) * w;
    return pos + neg;
}

Polynomial FourierSeries::analytic_polynomial() const {
    return Polynomial(std::vector<Complex>(coeffs_.begin() + order_, coeffs_.end()));
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
    const int m = std::max(a.order_, b.order_);
    FourierSeries out = FourierSeries::zero(m);
    for (int k = -m; k <= m; ++k) out.coeffs_[static_cast<std::size_t>(k + m)] = a.coeff(k) + b.coeff(k);
    return out;
}

// ---------------------------------------------------------------- operations

FourierSeries analyze(const BoundaryFunction& f) {
    const std::size_t n = f.size();
    const auto spectrum = detail::dft_forward(f.values());
    const int order = static_cast<int>(n / 2) - 1;
    std::vector<Complex> c(static_cast<std::size_t>(2 * order + 1));
    const double inv_n = 1.0 / static_cast<double>(n);
    for (int k = -order; k <= order; ++k) c[static_cast<std::size_t>(k + order)] = spectrum[bin_of(k, n)] * inv_n;
    return FourierSeries(order, std::move(c));
}

BoundaryFunction synthesize(const FourierSeries& s, const CircleGrid& grid) {
    const std::size_t n = grid.size();
    if (static_cast<std::size_t>(s.order()) > n / 2) {
        throw Error(ErrorCode::TruncationMismatch, "series order " + std::to_string(s.order()) +
                                                       " exceeds half the grid size " + std::to_string(n / 2));
    }
    std::vector<Complex> bins(n);
    for (int k = -s.order(); k <= s.order(); ++k) bins[bin_of(k, n)] += s.coeff(k);
    return BoundaryFunction(grid, detail::dft_backward(bins));
}

BoundaryFunction poly_eval_on_grid(const Polynomial& p, const CircleGrid& grid) {
    return BoundaryFunction::sample(grid, [&p](Complex z) { return p(z); });
}

Polynomial node_product(const ZeroFactorSet& factors) {
    const auto points = factors.expanded();
    return Polynomial::from_roots(points);
}

Polynomial conjugate_reflect(const Polynomial& d, int degree_bound) {
    if (d.degree() > degree_bound) {
        throw Error(ErrorCode::DegreeTooHigh, "degree " + std::to_string(d.degree()) + " exceeds reflection bound " +
                                                  std::to_string(degree_bound));
    }
    if (d.is_zero()) return {};
    std::vector<Complex> a(static_cast<std::size_t>(degree_bound) + 1);
    for (int k = 0; k <= d.degree(); ++k) a[static_cast<std::size_t>(degree_bound - k)] = std::conj(d.coeff(k));
    return Polynomial(std::move(a));
}

BoundaryFunction resample(const BoundaryFunction& f, std::size_t factor) {
    if (factor < 2 || !std::has_single_bit(factor)) {
        throw Error(ErrorCode::BadParams, "resample factor must be a power of two >= 2");
    }
    return interpolate_uniform(f.values(), 0.0, f.grid().refined(factor));
}

BoundaryFunction interpolate_uniform(std::span<const Complex> values, double theta0, const CircleGrid& grid) {
    const std::size_t m = values.size();
    const std::size_t n = grid.size();
    if (m == 0) throw Error(ErrorCode::InvalidSamples, "no samples to interpolate");
    const auto spectrum = detail::dft_forward(values);
    const double inv_m = 1.0 / static_cast<double>(m);
    std::vector<Complex> bins(n);
    const int half_n = static_cast<int>(n / 2);
    auto deposit = [&](int k, Complex c) {
        // Frequencies at or above the target Nyquist cannot be represented.
        if (k >= half_n || k <= -half_n) return;
        bins[bin_of(k, n)] += c * std::polar(1.0, -static_cast<double>(k) * theta0);
    };
    const int half_m = static_cast<int>(m / 2);
    for (std::size_t b = 0; b < m; ++b) {
        const Complex c = spectrum[b] * inv_m;
        const int k = static_cast<int>(b);
        if (m % 2 == 0 && k == half_m) {
            if (half_m < half_n) {
                deposit(half_m, 0.5 * c);
                deposit(-half_m, 0.5 * c);
            } else if (half_m == half_n) {
                // Same Nyquist on both grids: the mode folds onto one bin.
                bins[static_cast<std::size_t>(half_n)] +=
                    c * std::cos(static_cast<double>(half_m) * theta0);
            }
            continue;
        }
        deposit(k <= half_m ? k : k - static_cast<int>(m), c);
    }
    return BoundaryFunction(grid, detail::dft_backward(bins));
}

BoundaryFunction angular_derivative(const BoundaryFunction& f) {
    const FourierSeries s = analyze(f);
    std::vector<Complex> d(s.coeffs().begin(), s.coeffs().end());
    for (int k = -s.order(); k <= s.order(); ++k) d[static_cast<std::size_t>(k + s.order())] *= Complex(0.0, k);
    return synthesize(FourierSeries(s.order(), std::move(d)), f.grid());
}

}  // namespace windcert
