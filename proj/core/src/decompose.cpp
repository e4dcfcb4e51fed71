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

#include "windcert/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "windcert/error.hpp"
#include "windcert/winding.hpp"

namespace windcert {

namespace {

using Coeffs = std::vector<Complex>;

// Coefficients of (t - t0)/(e^{it} - e^{it0}) in powers of w = e^{it} - a,
// from t - t0 = -i log(1 + w/a).
Coeffs angle_ratio_series(Complex a, int order) {
    Coeffs s(static_cast<std::size_t>(order) + 1);
    const Complex inv_a = 1.0 / a;
    Complex inv_a_pow = inv_a;  // a^{-(l+1)}
    for (int l = 0; l <= order; ++l) {
        const double sign = (l % 2 == 0) ? 1.0 : -1.0;
        s[static_cast<std::size_t>(l)] = Complex(0.0, -1.0) * sign * inv_a_pow / static_cast<double>(l + 1);
        inv_a_pow *= inv_a;
    }
    return s;
}

Coeffs truncated_product(const Coeffs& x, const Coeffs& y, int order) {
    Coeffs out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order && i < static_cast<int>(x.size()); ++i) {
        for (int j = 0; i + j <= order && j < static_cast<int>(y.size()); ++j) {
            out[static_cast<std::size_t>(i + j)] += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

// q / (z - a) for a Laurent polynomial q with q(a) = 0, |a| = 1. Nonnegative
// modes are tail sums from the top, negative modes tail sums from the
// bottom, so rounding in q(a) stays in the constant mode instead of
// spreading across the spectrum. Callers pass floored coefficients.
Coeffs divide_by_linear(const Coeffs& q, int order, Complex a) {
    auto at = [order](int k) { return static_cast<std::size_t>(k + order); };
    Coeffs h(q.size());
    Complex acc{};
    for (int k = order - 1; k >= 0; --k) {
        acc = q[at(k + 1)] + a * acc;
        h[at(k)] = acc;
    }
    acc = Complex{};
    const Complex inv_a = 1.0 / a;
    for (int k = -order; k <= -1; ++k) {
        acc = (acc - q[at(k)]) * inv_a;
        h[at(k)] = acc;
    }
    return h;
}

}  // namespace

Jet jet_at_point(const BoundaryFunction& f, Complex a, int n) {
    if (n < 1) throw Error(ErrorCode::BadParams, "jet order must be >= 1");
    if (std::abs(std::abs(a) - 1.0) > ZeroFactorSet::kDefaultEps) {
        throw Error(ErrorCode::NodeOffCircle, "jet point has |a| = " + std::to_string(std::abs(a)));
    }
    const FourierSeries s = analyze(f);
    const int order = s.order();
    if (n > order) throw Error(ErrorCode::BadParams, "jet order exceeds series order");
    const double total = s.energy();
    if (total > 0.0 && s.top_decile_energy() > kSmoothnessGuard * total) {
        throw Error(ErrorCode::InsufficientSmoothness,
                    "top-decile energy fraction " + std::to_string(s.top_decile_energy() / total));
    }

    // t-derivatives d_j = f^{(j)}(t0)/j! from the floored spectrum.
    const FourierSeries clean = s.floored(kCoefficientFloor);
    const double t0 = std::arg(a);
    Coeffs d(static_cast<std::size_t>(n));
    for (int k = -order; k <= order; ++k) {
        const Complex c = clean.coeff(k);
        if (c == Complex{}) continue;
        Complex term = c * std::polar(1.0, static_cast<double>(k) * t0);
        const Complex ik(0.0, static_cast<double>(k));
        for (int j = 0; j < n; ++j) {
            if (j > 0) term *= ik / static_cast<double>(j);
            d[static_cast<std::size_t>(j)] += term;
        }
    }

    // f = sum_j d_j (t - t0)^j and (t - t0) = w * sigma(w).
    const int top = n - 1;
    const Coeffs sigma = angle_ratio_series(a, top + 3);
    Coeffs taylor(static_cast<std::size_t>(n));
    Coeffs power{1.0};  // (w sigma(w))^j truncated
    const Coeffs w_sigma = [&] {
        Coeffs ws(sigma.size() + 1);
        for (std::size_t l = 0; l < sigma.size(); ++l) ws[l + 1] = sigma[l];
        return ws;
    }();
    for (int j = 0; j < n; ++j) {
        if (j > 0) power = truncated_product(power, w_sigma, top);
        for (int k = 0; k <= top && k < static_cast<int>(power.size()); ++k) {
            taylor[static_cast<std::size_t>(k)] += d[static_cast<std::size_t>(j)] * power[static_cast<std::size_t>(k)];
        }
    }

    const std::vector<Complex> base(static_cast<std::size_t>(n), a);
    Polynomial p = from_newton_form(taylor, base);

    Coeffs q(clean.coeffs().begin(), clean.coeffs().end());
    for (int k = 0; k <= p.degree(); ++k) q[static_cast<std::size_t>(k + order)] -= p.coeff(k);
    for (int i = 0; i < n; ++i) q = divide_by_linear(q, order, a);

    FourierSeries h(order, std::move(q));
    BoundaryFunction samples = synthesize(h, f.grid());
    return Jet{std::move(p), std::move(taylor), std::move(h), std::move(samples)};
}

NewtonDecomposition newton_decompose(const BoundaryFunction& f, const ZeroFactorSet& nodes) {
    if (!nodes.all_at(Location::Boundary)) {
        throw Error(ErrorCode::NodeOffCircle, "Newton decomposition needs boundary nodes only");
    }
    // Merge repeated points, keeping first-occurrence order.
    ZeroFactorSet merged(nodes.eps());
    {
        std::vector<std::pair<Complex, int>> distinct;
        for (const auto& fac : nodes.factors()) {
            bool found = false;
            for (auto& [pt, m] : distinct) {
                if (std::abs(pt - fac.point) <= nodes.eps()) {
                    m += fac.multiplicity;
                    found = true;
                    break;
                }
            }
            if (!found) distinct.emplace_back(fac.point, fac.multiplicity);
        }
        for (const auto& [pt, m] : distinct) merged.add(pt, m, Location::Boundary);
    }

    NewtonDecomposition out{merged, {}, {}, {}, analyze(f), f, {}};
    for (const auto& fac : merged.factors()) {
        Jet jet = jet_at_point(out.remainder, fac.point, fac.multiplicity);
        out.coeffs.insert(out.coeffs.end(), jet.taylor.begin(), jet.taylor.end());
        out.node_sequence.insert(out.node_sequence.end(), static_cast<std::size_t>(fac.multiplicity), fac.point);
        out.remainder_series = std::move(jet.remainder_series);
        out.remainder = std::move(jet.remainder);
    }
    out.jet_polynomial = from_newton_form(out.coeffs, out.node_sequence);
    if (!merged.empty()) {
        out.smoothness_note = "remainder loses one derivative at each node relative to f";
    }
    return out;
}

SplitPair riesz_split(const FourierSeries& s) {
    const int m = s.order();
    std::vector<Complex> g(static_cast<std::size_t>(2 * m + 1));
    for (int k = 1; k <= m; ++k) g[static_cast<std::size_t>(k + m)] = std::conj(s.coeff(-k));
    return SplitPair{s.analytic_part(), FourierSeries(m, std::move(g))};
}

FourierSeries recombine(const SplitPair& split) { return split.analytic + split.conjugate.conj_reflected(); }

namespace {

constexpr double kOverflowTolerance = 1e-22;

// Tail energy against max(energy, floor).
bool resolved(const FourierSeries& s, double floor = 0.0) {
    const double e = std::max(s.energy(), floor);
    return e == 0.0 || s.top_decile_energy() <= kOverflowTolerance * e;
}

std::optional<Factorization> try_factorize(const BoundaryFunction& g, double delta) {
    const int winding = winding_number(g, delta).winding;
    const CircleGrid& grid = g.grid();
    const std::size_t n = g.size();

    std::vector<Complex> log_samples(n);
    double phase = 0.0;
    Complex prev{};
    for (std::size_t j = 0; j < n; ++j) {
        const Complex v = g[j] * std::polar(1.0, -static_cast<double>(winding) * grid.angle(j));
        phase = (j == 0) ? std::arg(v) : phase + std::arg(v / prev);
        prev = v;
        log_samples[j] = Complex(std::log(std::abs(v)), phase);
    }
    const FourierSeries u = analyze(BoundaryFunction(grid, std::move(log_samples)));
    if (!resolved(u, 1.0)) return std::nullopt;
    const SplitPair split = riesz_split(u);

    auto exponentiate = [&](const FourierSeries& s) -> std::optional<FourierSeries> {
        const BoundaryFunction vals = synthesize(s, grid);
        std::vector<Complex> e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = std::exp(vals[j]);
        const FourierSeries es = analyze(BoundaryFunction(grid, std::move(e)));
        if (!resolved(es) || es.negative_energy() > kOverflowTolerance * es.energy()) return std::nullopt;
        return es.analytic_part();
    };
    auto outer = exponentiate(split.analytic);
    auto conjugate = exponentiate(split.conjugate);
    if (!outer || !conjugate) return std::nullopt;

    Factorization out;
    out.winding = winding;
    out.outer_winding = winding_number(synthesize(*outer, grid)).winding;
    out.conjugate_winding = winding_number(synthesize(*conjugate, grid)).winding;
    out.outer = std::move(*outer);
    out.conjugate = std::move(*conjugate);
    out.grid_n = n;
    return out;
}

}  // namespace

Factorization factorize_nonvanishing(const BoundaryFunction& g, double delta) {
    if (!(g.min_modulus() > delta)) {
        throw Error(ErrorCode::ZeroOnBoundary, "factorization needs a zero-free function");
    }
    if (auto f = try_factorize(g, delta)) return *f;
    if (auto f = try_factorize(resample(g, 2), delta)) return *f;
    throw Error(ErrorCode::TruncationOverflow, "exponential factors not resolved after one grid refinement");
}

}  // namespace windcert
