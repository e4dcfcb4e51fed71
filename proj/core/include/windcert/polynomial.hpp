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

#ifndef WINDCERT_POLYNOMIAL_HPP
#define WINDCERT_POLYNOMIAL_HPP

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

namespace windcert {

using Complex = std::complex<double>;

/// Dense polynomial with complex coefficients in ascending degree.
///
/// Trailing coefficients whose modulus is at most 1e-12 times the largest
/// coefficient are trimmed on construction, so the leading coefficient is
/// nonzero unless the polynomial is zero. The zero polynomial has an empty
/// coefficient vector and reports degree -1.
class Polynomial {
public:
    static constexpr double kTrimTolerance = 1e-12;

    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs);

    static Polynomial constant(Complex c);
    static Polynomial monomial(int degree, Complex c = 1.0);
    /// Monic polynomial prod (z - r) over `roots`.
    static Polynomial from_roots(std::span<const Complex> roots);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of z^k, zero outside the stored range.
    Complex coeff(int k) const noexcept;
    Complex leading() const noexcept { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

    Complex operator()(Complex z) const noexcept;

    Polynomial derivative() const;
    /// Largest coefficient modulus.
    double max_coeff() const noexcept;
    /// Zero every coefficient with modulus <= `abs_tol`, then re-trim.
    Polynomial chopped(double abs_tol) const;
    /// Coefficients b_k with p(z) = sum_k b_k (z - center)^k.
    std::vector<Complex> taylor_at(Complex center) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(Complex s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, Complex s) { return lhs *= s; }
    friend Polynomial operator*(Complex s, Polynomial rhs) { return rhs *= s; }
    friend Polynomial operator-(const Polynomial& p) { return p * Complex{-1.0}; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();

    std::vector<Complex> coeffs_;
};

/// Polynomial long division: num = quotient * den + remainder, deg(remainder) < deg(den).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);

/// Polynomial with coefficients given in the Newton basis
/// 1, (z - nodes[0]), (z - nodes[0])(z - nodes[1]), ...
Polynomial from_newton_form(std::span<const Complex> coeffs, std::span<const Complex> nodes);

/// All roots via companion-matrix eigenvalues, each polished by a few Newton
/// steps on the original coefficients. Throws RootFindingFailed.
std::vector<Complex> roots(const Polynomial& p);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace windcert

#endif  // WINDCERT_POLYNOMIAL_HPP
