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

#ifndef WINDCERT_DECOMPOSE_HPP
#define WINDCERT_DECOMPOSE_HPP

#include <string>
#include <vector>

#include "windcert/spectral.hpp"
#include "windcert/zero_factors.hpp"

namespace windcert {

/// f = p + (z - a)^n h on the circle.
struct Jet {
    Polynomial polynomial;           ///< p, degree <= n - 1, monomial basis
    std::vector<Complex> taylor;     ///< b_0..b_{n-1} with p = sum b_k (z - a)^k
    FourierSeries remainder_series;  ///< h
    BoundaryFunction remainder;      ///< h on the grid of f
};

/// Energy fraction allowed in the top 10% of modes before a jet is refused.
inline constexpr double kSmoothnessGuard = 1e-10;

/// Boundary jet of order n at a point a on the circle.
///
/// Taylor data come from spectral t-derivatives of f(e^{it}) at t0 = arg a,
/// re-expanded in powers of w = z - a through the series of (t - t0)/w.
/// The remainder h is (f - p)/(z - a)^n, obtained by exact synthetic
/// division of the Laurent coefficients of f - p.
/// Throws InsufficientSmoothness, NodeOffCircle or BadParams.
Jet jet_at_point(const BoundaryFunction& f, Complex a, int n);

struct NewtonDecomposition {
    ZeroFactorSet nodes;               ///< all Boundary
    std::vector<Complex> node_sequence;  ///< a_1..a_N, each node repeated by its multiplicity
    std::vector<Complex> coeffs;       ///< A_0..A_{N-1}
    Polynomial jet_polynomial;         ///< D = A_0 + A_1 (z - a_1) + ... in monomial basis
    FourierSeries remainder_series;
    BoundaryFunction remainder;        ///< g with f = D + (z - a_1)...(z - a_N) g
    std::string smoothness_note;
};

/// Iterated jets: the first node to its multiplicity, then the next node on
/// the remainder, and so on. The Taylor coefficients of node j fill
/// A_{m_1+...+m_{j-1}} .. A_{m_1+...+m_j - 1}.
NewtonDecomposition newton_decompose(const BoundaryFunction& f, const ZeroFactorSet& nodes);

/// g = F + conj(G) with F the modes k >= 0 and G_k = conj(c_{-k}) for k >= 1.
struct SplitPair {
    FourierSeries analytic;   ///< F
    FourierSeries conjugate;  ///< G, zero constant term
};

SplitPair riesz_split(const FourierSeries& s);
/// F + conj(G) as a Laurent series.
FourierSeries recombine(const SplitPair& split);

/// g = F conj(G) z^N on the circle with F, G zero-free on the closed disc.
struct Factorization {
    FourierSeries outer;      ///< F
    FourierSeries conjugate;  ///< G, normalized so G(0) = 1
    int winding = 0;          ///< N
    int outer_winding = 0;    ///< W(F), expected 0
    int conjugate_winding = 0;  ///< W(G), expected 0
    std::size_t grid_n = 0;   ///< grid the factors were computed on
};

/// Logarithm splitting. Throws ZeroOnBoundary, or TruncationOverflow when
/// the exponentials are not resolved after one grid refinement.
Factorization factorize_nonvanishing(const BoundaryFunction& g, double delta);

}  // namespace windcert

#endif  // WINDCERT_DECOMPOSE_HPP
