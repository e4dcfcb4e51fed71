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

#include "windcert/winding.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "windcert/error.hpp"

namespace windcert {

namespace {

struct PhaseScan {
    double total = 0.0;
    double max_step = 0.0;
};

PhaseScan scan_phase(std::span<const Complex> v) {
    PhaseScan s;
    const std::size_t n = v.size();
    for (std::size_t j = 0; j < n; ++j) {
        const double step = std::arg(v[(j + 1) % n] / v[j]);
        s.total += step;
        s.max_step = std::max(s.max_step, std::abs(step));
    }
    return s;
}

}  // namespace

double default_delta(const BoundaryFunction& f) noexcept { return 1e-9 * f.max_modulus(); }

WindingReport winding_number(const BoundaryFunction& f, const WindingOptions& options) {
    const double delta = options.delta < 0.0 ? default_delta(f) : options.delta;
    BoundaryFunction current = f;
    for (int attempt = 0;; ++attempt) {
        const double min_mod = current.min_modulus();
        if (!(min_mod > delta)) {
            throw Error(ErrorCode::ZeroOnBoundary, "min |f| = " + std::to_string(min_mod) +
                                                       " does not exceed delta = " + std::to_string(delta));
        }
        const PhaseScan scan = scan_phase(current.values());
        if (scan.max_step >= std::numbers::pi / 2.0) {
            if (attempt >= options.max_refinements) {
                throw Error(ErrorCode::PhaseUnresolved, "phase step " + std::to_string(scan.max_step) +
                                                            " rad on a grid of " + std::to_string(current.size()));
            }
            current = resample(current, 2);
            continue;
        }
        WindingReport r;
        r.raw_phase_turns = scan.total / (2.0 * std::numbers::pi);
        r.winding = static_cast<int>(std::lround(r.raw_phase_turns));
        r.min_modulus = min_mod;
        r.max_phase_step = scan.max_step;
        r.grid_n = current.size();
        if (std::abs(r.raw_phase_turns - r.winding) > options.integer_tolerance) {
            throw Error(ErrorCode::NonIntegerTotal, "phase total " + std::to_string(r.raw_phase_turns) + " turns");
        }
        return r;
    }
}

WindingReport winding_number(const BoundaryFunction& f, double delta) {
    WindingOptions o;
    o.delta = delta;
    return winding_number(f, o);
}

std::vector<double> cumulative_phase(const BoundaryFunction& f) {
    const auto v = f.values();
    std::vector<double> out(v.size() + 1, 0.0);
    for (std::size_t j = 0; j < v.size(); ++j) out[j + 1] = out[j] + std::arg(v[(j + 1) % v.size()] / v[j]);
    return out;
}

int zero_count(const BoundaryFunction& g, double delta) {
    const FourierSeries s = analyze(g);
    const double total = s.energy();
    if (total > 0.0 && s.negative_energy() > kAnalyticEnergyTolerance * total) {
        throw Error(ErrorCode::NotAnalytic, "anti-analytic energy fraction " +
                                                std::to_string(s.negative_energy() / total));
    }
    return winding_number(g, delta).winding;
}

bool check_interpolation_bound(const BoundaryFunction& g, int pole_degree, int n, const Polynomial& p, double delta) {
    if (n < 0) throw Error(ErrorCode::BadParams, "n must be nonnegative");
    if (p.degree() > n) throw Error(ErrorCode::DegreeTooHigh, "deg p exceeds n");
    const BoundaryFunction composite = g * poly_eval_on_grid(Polynomial::monomial(n), g.grid()) +
                                       poly_eval_on_grid(p, g.grid());
    return zero_count(composite, delta) <= pole_degree + n;
}

std::vector<Complex> argument_moments(const BoundaryFunction& f, int count) {
    // (1/2 pi i) \oint z^k f'/f dz = (1/2 pi i) \int z^k (df/dt)/f dt.
    const BoundaryFunction df = angular_derivative(f);
    const std::size_t n = f.size();
    std::vector<Complex> out(static_cast<std::size_t>(count) + 1);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex ratio = df[j] / f[j];
        const Complex z = f.grid().node(j);
        Complex zk = 1.0;
        for (int k = 0; k <= count; ++k) {
            out[static_cast<std::size_t>(k)] += zk * ratio;
            zk *= z;
        }
    }
    const Complex scale = Complex(0.0, -1.0) / static_cast<double>(n);
    for (Complex& m : out) m *= scale;
    return out;
}

}  // namespace windcert
