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

#ifndef WINDCERT_WINDING_HPP
#define WINDCERT_WINDING_HPP

#include <cstddef>
#include <vector>

#include "windcert/spectral.hpp"

namespace windcert {

struct WindingReport {
    int winding = 0;
    double raw_phase_turns = 0.0;  ///< total unwrapped phase / 2 pi
    double min_modulus = 0.0;
    double max_phase_step = 0.0;  ///< radians, on the grid actually used
    std::size_t grid_n = 0;
};

struct WindingOptions {
    /// Absolute zero guard; negative selects the relative default.
    double delta = -1.0;
    int max_refinements = 3;
    double integer_tolerance = 1e-6;
};

/// Relative zero guard: 1e-9 * max |f_j|.
double default_delta(const BoundaryFunction& f) noexcept;

/// Winding number of f around 0 along the positively oriented circle.
///
/// Phase increments are principal values in (-pi, pi]. If any increment
/// reaches pi/2 the samples are upsampled by band-limited interpolation,
/// at most `max_refinements` doublings. Throws ZeroOnBoundary,
/// PhaseUnresolved or NonIntegerTotal.
WindingReport winding_number(const BoundaryFunction& f, const WindingOptions& options = {});
WindingReport winding_number(const BoundaryFunction& f, double delta);

/// Cumulative unwrapped phase (radians) at each node, starting at 0.
std::vector<double> cumulative_phase(const BoundaryFunction& f);

/// Relative anti-analytic energy above which a function is not treated as a
/// boundary trace of a holomorphic function.
inline constexpr double kAnalyticEnergyTolerance = 1e-8;

/// Number of zeros in the disc of the holomorphic function with boundary
/// values g (argument principle). Throws NotAnalytic when the anti-analytic
/// energy exceeds 1e-8 of the total, plus any winding error.
int zero_count(const BoundaryFunction& g, double delta);

/// True iff Z(z^n g + p) <= N + n. Needs deg p <= n.
bool check_interpolation_bound(const BoundaryFunction& g, int pole_degree, int n, const Polynomial& p, double delta);

/// Power sums sum_zeros z^k - sum_poles z^k, k = 0..count, of the meromorphic
/// function with boundary values f, from the contour integrals of z^k f'/f.
/// Index 0 is the winding number as a real number.
std::vector<Complex> argument_moments(const BoundaryFunction& f, int count);

}  // namespace windcert

#endif  // WINDCERT_WINDING_HPP
