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

#ifndef WINDCERT_CRITERIA_HPP
#define WINDCERT_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "windcert/extension.hpp"
#include "windcert/spectral.hpp"
#include "windcert/winding.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {

/// PfPlusOne probes W(P f + 1); FPlusPiP probes W(f + Pi p).
enum class ProbeKind { PfPlusOne, FPlusPiP };

std::string_view to_string(ProbeKind kind) noexcept;

struct ProbeFamily {
    ProbeKind kind = ProbeKind::PfPlusOne;
    ZeroFactorSet factors;  ///< Pi; empty for plain probes
    int max_degree = 16;
    int budget = 0;  ///< J
};

/// Pi * probe, the polynomial that actually enters the composite.
Polynomial effective_probe(const ProbeFamily& family, const Polynomial& probe);

/// (Pi p) f + 1 or f + Pi p on the grid of f.
BoundaryFunction probe_composite(const BoundaryFunction& f, const Polynomial& probe, const ProbeFamily& family);

/// Winding of the composite. A negative delta selects the relative default
/// of the composite. Throws ZeroOnBoundary when the probe is not admissible.
WindingReport probe_winding(const BoundaryFunction& f, const Polynomial& probe, const ProbeFamily& family,
                            double delta = -1.0);

struct WitnessResult {
    bool found = false;
    Polynomial probe;         ///< p, before multiplication by Pi
    int winding = 0;          ///< winding of the witness composite
    double min_modulus = 0.0;
    int probes_tried = 0;
    int probes_skipped = 0;   ///< composites too close to zero or not resolved
    std::uint64_t seed = 0;

    friend bool operator==(const WitnessResult&, const WitnessResult&) = default;
};

/// Deterministic probe generator: probe i depends only on (f, family, seed, i).
///
/// Probes cycle through three strategies: large constants, random
/// coefficients at scales 2^-8..2^8, and least-squares probes that steer the
/// composite toward t z^-m, m = 1..J+2, on a random arc of the circle.
class ProbeSequence {
public:
    ProbeSequence(const BoundaryFunction& f, ProbeFamily family, std::uint64_t seed);

    Polynomial operator()(std::uint64_t index) const;
    const ProbeFamily& family() const noexcept { return family_; }

private:
    Polynomial large_constant(std::uint64_t index) const;
    Polynomial random_coefficients(std::uint64_t index) const;
    Polynomial structured(std::uint64_t index) const;

    ProbeFamily family_;
    std::uint64_t seed_;
    double scale_;  ///< coefficient scale that balances the two terms of the composite
    std::vector<Complex> nodes_;     ///< coarse nodes for least squares
    std::vector<Complex> f_coarse_;  ///< f at those nodes
    std::vector<Complex> pi_coarse_; ///< Pi at those nodes
    std::vector<Complex> f_inverse_analytic_;  ///< Taylor data of 1/f when usable, else empty
};

struct WitnessOptions {
    std::size_t threads = 0;  ///< 0 selects the hardware concurrency
    std::size_t batch = 64;
};

/// Semi-decision search for a probe with winding <= -J-1. Hits are
/// re-verified on the twice-refined grid. The lowest-index hit is reported
/// regardless of thread scheduling.
WitnessResult witness_search(const BoundaryFunction& f, const ProbeFamily& family, int probe_budget,
                             std::uint64_t seed, const WitnessOptions& options = {});

struct Reduction {
    BoundaryFunction reciprocal;  ///< h = 1/f
    int shift = 0;                ///< W(f)
};

/// h = 1/f and shift = W(f), so W(P f + 1) = shift + W(P + h).
Reduction reduce_nonvanishing(const BoundaryFunction& f, double delta);

enum class CertificationStatus { Certified, Refuted, Inconclusive };

std::string_view to_string(CertificationStatus status) noexcept;

/// outer(z) * base(z)^{+-1}, base = node_factor * analytic + rational.
struct MeromorphicExtension {
    Polynomial node_factor{1.0};
    FourierSeries analytic;
    RationalFunction rational{Polynomial{}, Polynomial{1.0}};
    bool reciprocal = false;
    Polynomial outer{1.0};

    /// Value at |z| <= 1 away from poles; the analytic part is summed as a power series.
    Complex evaluate(Complex z) const;
    BoundaryFunction on_grid(const CircleGrid& grid) const;
};

struct CertificationResult {
    CertificationStatus status = CertificationStatus::Inconclusive;
    std::optional<MeromorphicExtension> extension;
    std::vector<PoleEstimate> poles;
    int pole_count = 0;
    int budget = 0;
    double residual = 0.0;  ///< ||extension - f||_inf / ||f||_inf on the grid
    std::optional<WitnessResult> witness;
    std::vector<std::string> diagnostics;
};

struct CertifyOptions {
    /// Relative node-value guard: |f(a)| <= node_delta * ||f||_inf counts as zero.
    double node_delta = 1e-9;
    /// Throw NodeValueZero instead of recording a diagnostic.
    bool strict_node_values = false;
    double residual_tolerance = 1e-7;
    /// Run witness_search when certification fails.
    bool corroborate = true;
    int witness_probes = 2000;
    std::uint64_t seed = 1;
};

/// Decompose at boundary nodes, split, fit the conjugate part by a rational
/// function of degree N + J and reassemble. Certified carries an explicit
/// extension with at most J poles; otherwise Inconclusive, with a witness
/// attached when corroboration finds one.
CertificationResult certify_meromorphic_extension(const BoundaryFunction& f, const ZeroFactorSet& nodes, int budget,
                                                  const CertifyOptions& options = {});

/// f = Pi g with Pi carrying the boundary zeros. For N = W(g) >= -J the
/// reciprocal 1/g is certified with budget N + J and its zeros become the
/// poles of f. For N < -J, or when that fails, a witness refutes.
CertificationResult certify_with_boundary_zeros(const BoundaryFunction& f, const ZeroFactorSet& zeros, int budget,
                                                const CertifyOptions& options = {});

/// Pi split into inside (Pi_1, N factors), boundary (Pi_2) and outside
/// (dropped) factors; f / Pi_1 is certified with nodes Pi_2 and budget N + J.
CertificationResult classify_with_mixed_factors(const BoundaryFunction& f, const ZeroFactorSet& pi, int budget,
                                                const CertifyOptions& options = {});

/// Shift by c = 2 max|f| (1 when f = 0) so that W(f + c) = 0, then test
/// 1/(f + c) for a holomorphic extension; otherwise search the P(f + c) + 1 family.
CertificationResult shift_criterion_test(const BoundaryFunction& f, int probe_budget, std::uint64_t seed);

}  // namespace windcert

#endif  // WINDCERT_CRITERIA_HPP
