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

#include "windcert/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "windcert/error.hpp"

namespace windcert {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, Complex c) {
    std::vector<Complex> v(static_cast<std::size_t>(degree) + 1, Complex{});
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> v{1.0};
    for (const Complex r : roots) {
        v.push_back(Complex{});
        for (std::size_t k = v.size() - 1; k > 0; --k) {
            v[k] = v[k - 1] - r * v[k];
        }
        v[0] *= -r;
    }
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    const double scale = max_coeff();
    if (scale == 0.0) {
        coeffs_.clear();
        return;
    }
    while (!coeffs_.empty() && std::abs(coeffs_.back()) <= kTrimTolerance * scale) {
        coeffs_.pop_back();
    }
}

Complex Polynomial::coeff(int k) const noexcept {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex{};
    return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

double Polynomial::max_coeff() const noexcept {
    double m = 0.0;
    for (const Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::chopped(double abs_tol) const {
    std::vector<Complex> v = coeffs_;
    for (Complex& c : v) {
        if (std::abs(c) <= abs_tol) c = Complex{};
    }
    return Polynomial(std::move(v));
}

std::vector<Complex> Polynomial::taylor_at(Complex center) const {
    // Repeated synthetic division by (z - center).
    std::vector<Complex> work = coeffs_;
    std::vector<Complex> out;
    out.reserve(work.size());
    while (!work.empty()) {
        Complex carry{};
        for (auto it = work.rbegin(); it != work.rend(); ++it) {
            carry = carry * center + *it;
            *it = carry;
        }
        out.push_back(work.front());
        work.erase(work.begin());
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Complex> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(Complex s) {
    for (Complex& c : coeffs_) c *= s;
    trim();
    return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw Error(ErrorCode::BadParams, "polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<Complex> rem(num.coeffs().begin(), num.coeffs().end());
    const int dn = den.degree();
    const Complex lead = den.leading();
    std::vector<Complex> quot(static_cast<std::size_t>(num.degree() - dn) + 1);
    for (int k = num.degree() - dn; k >= 0; --k) {
        const Complex q = rem[static_cast<std::size_t>(k + dn)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= dn; ++j) rem[static_cast<std::size_t>(k + j)] -= q * den.coeff(j);
    }
    rem.resize(static_cast<std::size_t>(dn));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial from_newton_form(std::span<const Complex> coeffs, std::span<const Complex> nodes) {
    // Horner in the Newton basis, innermost term first.
    Polynomial acc;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (k < coeffs.size() - 1) acc *= Polynomial({-nodes[k], 1.0});
        acc += Polynomial::constant(coeffs[k]);
    }
    return acc;
}

std::vector<Complex> roots(const Polynomial& p) {
    const int n = p.degree();
    if (n < 1) return {};
    // Roots at the origin are split off exactly.
    int zeros_at_origin = 0;
    while (zeros_at_origin < n && p.coeff(zeros_at_origin) == Complex{}) ++zeros_at_origin;
    const int m = n - zeros_at_origin;
    std::vector<Complex> out(static_cast<std::size_t>(zeros_at_origin), Complex{});
    if (m == 0) return out;

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(m, m);
    const Complex lead = p.leading();
    for (int i = 0; i < m; ++i) {
        companion(0, i) = -p.coeff(n - 1 - i) / lead;
        if (i + 1 < m) companion(i + 1, i) = 1.0;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::RootFindingFailed, "companion eigenvalue iteration did not converge");
    }
    const Polynomial dp = p.derivative();
    for (int i = 0; i < m; ++i) {
        Complex z = solver.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            const Complex d = dp(z);
            if (std::abs(d) == 0.0) break;
            const Complex step = p(z) / d;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            // Keep Newton from wandering on clustered roots.
            if (std::abs(step) > 1e-6 * (1.0 + std::abs(z))) break;
            z -= step;
        }
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::RootFindingFailed, "non-finite root estimate");
        }
        out.push_back(z);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Complex c = p.coeff(k);
        if (c == Complex{}) continue;
        if (!first) os << " + ";
        os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
        if (k > 0) os << "*z";
        if (k > 1) os << "^" << k;
        first = false;
    }
    return os;
}

}  // namespace windcert
