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

#include "windcert/criteria.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "windcert/decompose.hpp"
#include "windcert/error.hpp"
#include "windcert/io.hpp"

namespace windcert {

std::string_view to_string(ProbeKind kind) noexcept {
    return kind == ProbeKind::PfPlusOne ? "pf1" : "fpip";
}

std::string_view to_string(CertificationStatus status) noexcept {
    switch (status) {
        case CertificationStatus::Certified: return "certified";
        case CertificationStatus::Refuted: return "refuted";
        case CertificationStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

// ------------------------------------------------------------------ probes

Polynomial effective_probe(const ProbeFamily& family, const Polynomial& probe) {
    if (family.factors.empty()) return probe;
    return node_product(family.factors) * probe;
}

BoundaryFunction probe_composite(const BoundaryFunction& f, const Polynomial& probe, const ProbeFamily& family) {
    const BoundaryFunction p = poly_eval_on_grid(effective_probe(family, probe), f.grid());
    if (family.kind == ProbeKind::PfPlusOne) return p * f + Complex(1.0);
    return f + p;
}

WindingReport probe_winding(const BoundaryFunction& f, const Polynomial& probe, const ProbeFamily& family,
                            double delta) {
    const BoundaryFunction c = probe_composite(f, probe, family);
    return winding_number(c, delta < 0.0 ? default_delta(c) : delta);
}

namespace {

constexpr std::size_t kCoarseNodes = 256;

std::mt19937_64 probe_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

Complex normal_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    const double re = d(rng);
    return {re, d(rng)};
}

Complex unit_phase(std::mt19937_64& rng) {
    return std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
}

}  // namespace

// Composite = weight * p + base with weight = Pi f, base = 1 (PfPlusOne) or
// weight = Pi, base = f (FPlusPiP).
ProbeSequence::ProbeSequence(const BoundaryFunction& f, ProbeFamily family, std::uint64_t seed)
    : family_(std::move(family)), seed_(seed) {
    if (family_.max_degree < 0) throw Error(ErrorCode::BadParams, "max_degree must be >= 0");
    if (family_.budget < 0) throw Error(ErrorCode::BadParams, "pole budget must be >= 0");
    const double norm = f.max_modulus() > 0.0 ? f.max_modulus() : 1.0;
    scale_ = family_.kind == ProbeKind::PfPlusOne ? 1.0 / norm : norm;

    const Polynomial pi = node_product(family_.factors);
    const std::size_t n = f.size();
    const std::size_t stride = n > kCoarseNodes ? n / kCoarseNodes : 1;
    for (std::size_t j = 0; j < n; j += stride) {
        nodes_.push_back(f.grid().node(j));
        f_coarse_.push_back(f[j]);
        pi_coarse_.push_back(pi(f.grid().node(j)));
    }

    // Fourier data of 1/weight and base/weight for the projection probes.
    const BoundaryFunction pi_grid = poly_eval_on_grid(pi, f.grid());
    const BoundaryFunction weight = family_.kind == ProbeKind::PfPlusOne ? pi_grid * f : pi_grid;
    if (weight.max_modulus() > 0.0 && weight.min_modulus() > 1e-3 * weight.max_modulus()) {
        const FourierSeries inv = analyze(weight.reciprocal());
        const FourierSeries ratio =
            analyze(family_.kind == ProbeKind::PfPlusOne ? weight.reciprocal() : f * weight.reciprocal());
        const int top = family_.max_degree + family_.budget + 2;
        if (top < inv.order()) {
            f_inverse_analytic_.reserve(static_cast<std::size_t>(2 * (top + 1)));
            for (int k = 0; k <= top; ++k) f_inverse_analytic_.push_back(inv.coeff(k));
            for (int k = 0; k <= top; ++k) f_inverse_analytic_.push_back(ratio.coeff(k));
        }
    }
}

Polynomial ProbeSequence::operator()(std::uint64_t index) const {
    switch (index % 3) {
        case 0: return large_constant(index);
        case 1: return random_coefficients(index);
        default: return structured(index);
    }
}

Polynomial ProbeSequence::large_constant(std::uint64_t index) const {
    auto rng = probe_rng(seed_, index);
    const int s = std::uniform_int_distribution<int>(-2, 12)(rng);
    return Polynomial::constant(std::ldexp(scale_, s) * unit_phase(rng));
}

Polynomial ProbeSequence::random_coefficients(std::uint64_t index) const {
    auto rng = probe_rng(seed_, index);
    const int degree = std::uniform_int_distribution<int>(0, family_.max_degree)(rng);
    const int s = std::uniform_int_distribution<int>(-8, 8)(rng);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = normal_complex(rng) * std::ldexp(scale_, s);
    return Polynomial(std::move(c));
}

Polynomial ProbeSequence::structured(std::uint64_t index) const {
    auto rng = probe_rng(seed_, index);
    const int m = std::uniform_int_distribution<int>(1, family_.budget + 2)(rng);
    const int degree = std::uniform_int_distribution<int>(0, family_.max_degree)(rng);
    const double target_scale = family_.kind == ProbeKind::PfPlusOne ? 1.0 : 1.0 / scale_;
    const Complex t = std::exp2(std::uniform_real_distribution<double>(-3.0, 1.0)(rng)) * target_scale * unit_phase(rng);
    const bool project = !f_inverse_analytic_.empty() && std::bernoulli_distribution(0.5)(rng);

    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    if (project) {
        // Analytic part of (t z^-m - base) / weight, truncated.
        const std::size_t half = f_inverse_analytic_.size() / 2;
        for (int k = 0; k <= degree; ++k) {
            c[static_cast<std::size_t>(k)] = t * f_inverse_analytic_[static_cast<std::size_t>(k + m)] -
                                             f_inverse_analytic_[half + static_cast<std::size_t>(k)];
        }
    } else {
        // Weighted least squares toward t z^-m, full weight on a random arc.
        const double centre = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
        const double width = std::uniform_real_distribution<double>(0.5, 2.0 * std::numbers::pi)(rng);
        const double off_arc = std::pow(10.0, std::uniform_real_distribution<double>(-4.0, -1.0)(rng));
        const auto rows = static_cast<Eigen::Index>(nodes_.size());
        Eigen::MatrixXcd a(rows, degree + 1);
        Eigen::VectorXcd b(rows);
        for (Eigen::Index r = 0; r < rows; ++r) {
            const auto j = static_cast<std::size_t>(r);
            const Complex z = nodes_[j];
            const double dist = std::abs(std::arg(z * std::polar(1.0, -centre)));
            const double w = dist < width / 2.0 ? 1.0 : off_arc;
            const bool pf1 = family_.kind == ProbeKind::PfPlusOne;
            const Complex weight = pf1 ? pi_coarse_[j] * f_coarse_[j] : pi_coarse_[j];
            const Complex base = pf1 ? Complex(1.0) : f_coarse_[j];
            Complex zk = 1.0;
            for (int k = 0; k <= degree; ++k) {
                a(r, k) = w * weight * zk;
                zk *= z;
            }
            b(r) = w * (t * std::pow(z, -m) - base);
        }
        const Eigen::VectorXcd x = a.colPivHouseholderQr().solve(b);
        double biggest = 0.0;
        for (int k = 0; k <= degree; ++k) biggest = std::max(biggest, std::abs(x(k)));
        for (int k = 0; k <= degree; ++k) {
            c[static_cast<std::size_t>(k)] = x(k) + 1e-6 * biggest * normal_complex(rng);
        }
    }
    for (const auto& x : c) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return random_coefficients(index);
    }
    return Polynomial(std::move(c));
}

// ---------------------------------------------------------------- search

namespace {

enum class Outcome { Miss, Skip, Hit };

struct ProbeOutcome {
    Outcome outcome = Outcome::Miss;
    Polynomial probe;
    int winding = 0;
    double min_modulus = 0.0;
};

ProbeOutcome evaluate_probe(const BoundaryFunction& f, const BoundaryFunction& fine, const ProbeSequence& seq,
                            std::uint64_t index) {
    ProbeOutcome out;
    out.probe = seq(index);
    const ProbeFamily& family = seq.family();
    const BoundaryFunction c = probe_composite(f, out.probe, family);
    const double delta = default_delta(c);
    if (!(c.min_modulus() > delta)) {
        out.outcome = Outcome::Skip;
        return out;
    }
    try {
        const WindingReport r = winding_number(c, delta);
        out.winding = r.winding;
        out.min_modulus = r.min_modulus;
        if (r.winding > -family.budget - 1) return out;
        const BoundaryFunction cf = probe_composite(fine, out.probe, family);
        const WindingReport rf = winding_number(cf, default_delta(cf));
        out.outcome = rf.winding == r.winding ? Outcome::Hit : Outcome::Skip;
    } catch (const Error&) {
        out.outcome = Outcome::Skip;
    }
    return out;
}

}  // namespace

WitnessResult witness_search(const BoundaryFunction& f, const ProbeFamily& family, int probe_budget,
                             std::uint64_t seed, const WitnessOptions& options) {
    if (probe_budget < 1) throw Error(ErrorCode::BadParams, "probe budget must be >= 1");
    const ProbeSequence seq(f, family, seed);
    const BoundaryFunction fine = resample(f, 2);
    std::size_t threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(threads, 1);
    const std::size_t batch = std::max<std::size_t>(options.batch, 1);

    WitnessResult result;
    result.seed = seed;
    const auto budget = static_cast<std::size_t>(probe_budget);
    std::vector<ProbeOutcome> outcomes;
    for (std::size_t start = 0; start < budget; start += batch) {
        const std::size_t count = std::min(batch, budget - start);
        outcomes.assign(count, ProbeOutcome{});
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < count; i = next++) outcomes[i] = evaluate_probe(f, fine, seq, start + i);
        };
        const std::size_t workers = std::min(threads, count);
        if (workers <= 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        }
        for (std::size_t i = 0; i < count; ++i) {
            const ProbeOutcome& o = outcomes[i];
            if (o.outcome == Outcome::Skip) ++result.probes_skipped;
            if (o.outcome == Outcome::Hit) {
                result.found = true;
                result.probe = o.probe;
                result.winding = o.winding;
                result.min_modulus = o.min_modulus;
                result.probes_tried = static_cast<int>(start + i + 1);
                return result;
            }
        }
    }
    result.probes_tried = probe_budget;
    return result;
}

Reduction reduce_nonvanishing(const BoundaryFunction& f, double delta) {
    if (!(f.min_modulus() > delta)) throw Error(ErrorCode::ZeroOnBoundary, "reduction needs a zero-free function");
    const int shift = winding_number(f, delta).winding;
    return Reduction{f.reciprocal(), shift};
}

// ------------------------------------------------------------ extensions

Complex MeromorphicExtension::evaluate(Complex z) const {
    Complex base = node_factor(z) * analytic.analytic_part().evaluate(z);
    if (!rational.num.is_zero()) base += rational(z);
    return outer(z) * (reciprocal ? 1.0 / base : base);
}

BoundaryFunction MeromorphicExtension::on_grid(const CircleGrid& grid) const {
    BoundaryFunction base = poly_eval_on_grid(node_factor, grid) * synthesize(analytic.analytic_part(), grid);
    if (!rational.num.is_zero()) base = base + rational.on_grid(grid);
    if (reciprocal) base = base.reciprocal();
    return poly_eval_on_grid(outer, grid) * base;
}

namespace {

double sup_relative(const BoundaryFunction& a, const BoundaryFunction& b, double scale) {
    double d = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
    return scale > 0.0 ? d / scale : d;
}

FourierSeries floor_absolute(const FourierSeries& s, double tol) {
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    for (auto& x : c) {
        if (std::abs(x) <= tol) x = Complex{};
    }
    return FourierSeries(s.order(), std::move(c));
}

// Trailing factors of z shared by num and den.
void cancel_origin(Polynomial& num, Polynomial& den) {
    auto low = [](const Polynomial& p) {
        int k = 0;
        while (k <= p.degree() && p.coeff(k) == Complex{}) ++k;
        return k;
    };
    const int shift = num.is_zero() ? low(den) : std::min(low(num), low(den));
    if (shift == 0) return;
    auto drop = [shift](const Polynomial& p) {
        std::vector<Complex> c(p.coeffs().begin(), p.coeffs().end());
        c.erase(c.begin(), c.begin() + std::min<std::ptrdiff_t>(shift, static_cast<std::ptrdiff_t>(c.size())));
        return Polynomial(std::move(c));
    };
    num = drop(num);
    den = drop(den);
}

Polynomial chop_relative(const Polynomial& p, double rel) {
    return p.chopped(rel * std::max(p.max_coeff(), 0.0));
}

void normalize(RationalFunction& r) {
    const Complex d0 = r.den.coeff(0);
    const Complex s = std::abs(d0) > 0.0 ? d0 : r.den.leading();
    if (s == Complex{}) return;
    r.num *= 1.0 / s;
    r.den *= 1.0 / s;
}

WitnessResult corroborate(const BoundaryFunction& f, int budget, const CertifyOptions& options) {
    ProbeFamily family;
    family.kind = ProbeKind::PfPlusOne;
    family.budget = budget;
    return witness_search(f, family, options.witness_probes, options.seed);
}

// Monic polynomial whose roots have the given power sums p_1..p_c.
Polynomial from_power_sums(const std::vector<Complex>& p) {
    const int c = static_cast<int>(p.size());
    std::vector<Complex> e(static_cast<std::size_t>(c) + 1);
    e[0] = 1.0;
    for (int k = 1; k <= c; ++k) {
        Complex acc{};
        for (int i = 1; i <= k; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            acc += sign * e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i - 1)];
        }
        e[static_cast<std::size_t>(k)] = acc / static_cast<double>(k);
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(c) + 1);
    for (int k = 0; k <= c; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        coeffs[static_cast<std::size_t>(c - k)] = sign * e[static_cast<std::size_t>(k)];
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace

CertificationResult certify_meromorphic_extension(const BoundaryFunction& f, const ZeroFactorSet& nodes, int budget,
                                                  const CertifyOptions& options) {
    if (budget < 0) throw Error(ErrorCode::BadParams, "pole budget must be >= 0");
    if (!nodes.all_at(Location::Boundary)) throw Error(ErrorCode::NodeOffCircle, "certification nodes must lie on the circle");

    CertificationResult result;
    result.budget = budget;
    const CircleGrid& grid = f.grid();
    const double scale = f.max_modulus();
    if (scale == 0.0) {
        result.status = CertificationStatus::Certified;
        result.extension = MeromorphicExtension{Polynomial{1.0}, FourierSeries::zero(0), {}, false, Polynomial{1.0}};
        return result;
    }

    const FourierSeries spectrum = analyze(f);
    for (const auto& fac : nodes.factors()) {
        const Complex value = spectrum.evaluate(fac.point);
        if (std::abs(value) <= options.node_delta * scale) {
            if (options.strict_node_values) {
                throw Error(ErrorCode::NodeValueZero, "f vanishes at node " + format_complex(fac.point));
            }
            result.diagnostics.push_back("node_value_zero=" + format_complex(fac.point));
        }
    }

    const NewtonDecomposition dec = newton_decompose(f, nodes);
    const int n_nodes = static_cast<int>(dec.node_sequence.size());
    const Polynomial d = dec.jet_polynomial.chopped(1e-12 * scale);
    const FourierSeries g =
        floor_absolute(dec.remainder_series, kCoefficientFloor * std::max(dec.remainder_series.max_coeff(), scale));
    const SplitPair split = riesz_split(g);

    const Polynomial a = conjugate_reflect(d, n_nodes);
    Polynomial b{1.0};
    for (const Complex node : dec.node_sequence) b *= Polynomial{1.0, -std::conj(node)};
    const BoundaryFunction b_grid = poly_eval_on_grid(b, grid);
    const BoundaryFunction u = poly_eval_on_grid(a, grid) + b_grid * synthesize(split.conjugate, grid);

    RationalFit fit;
    try {
        fit = rational_recover_ratio(u, b_grid, n_nodes + budget);
    } catch (const Error& e) {
        result.diagnostics.push_back(std::string("rational_fit=") + std::string(to_string(e.code())));
        if (options.corroborate) {
            WitnessResult w = corroborate(f, budget, options);
            if (w.found) result.witness = w;
        }
        return result;
    }

    // Q = R * (B factors that Q actually contains).
    Polynomial r = fit.model.den;
    Polynomial kept{1.0};       // node factors (z - a) absorbed by Q
    Polynomial remaining{1.0};  // node factors (z - a) left in the product
    int absorbed = 0;
    for (const Complex node : dec.node_sequence) {
        const Polynomial factor{1.0, -std::conj(node)};
        if (std::abs(r(node)) <= 1e-6 * r.max_coeff()) {
            r = divmod(r, factor).first;
            kept *= Polynomial{-node, 1.0};
            ++absorbed;
        } else {
            remaining *= Polynomial{-node, 1.0};
        }
    }
    Polynomial den = conjugate_reflect(r, fit.degree - absorbed);
    Polynomial num = remaining * conjugate_reflect(fit.model.num, fit.degree);
    den = chop_relative(den, 1e-13);
    num = chop_relative(num, 1e-13);
    cancel_origin(num, den);

    for (const Complex root : roots(den)) {
        if (std::abs(std::abs(root) - 1.0) <= 1e-6) {
            result.diagnostics.push_back("pole_on_circle=" + format_complex(root));
            if (options.corroborate) {
                WitnessResult w = corroborate(f, budget, options);
                if (w.found) result.witness = w;
            }
            return result;
        }
    }

    RationalFunction rational{num, den};
    normalize(rational);
    std::vector<PoleEstimate> poles = num.is_zero() ? std::vector<PoleEstimate>{} : roots_inside(den, 1e-7);

    MeromorphicExtension ext;
    ext.node_factor = node_product(nodes);
    ext.analytic = split.analytic;
    ext.rational = rational;
    result.residual = sup_relative(ext.on_grid(grid), f, scale);
    result.pole_count = total_multiplicity(poles);
    result.poles = std::move(poles);
    result.extension = std::move(ext);
    result.diagnostics.push_back("fit_degree=" + std::to_string(fit.degree));

    if (result.pole_count > budget) result.diagnostics.push_back("pole_count_exceeds_budget");
    if (result.residual > options.residual_tolerance) result.diagnostics.push_back("residual_too_large");
    if (result.pole_count <= budget && result.residual <= options.residual_tolerance) {
        result.status = CertificationStatus::Certified;
        return result;
    }
    if (options.corroborate) {
        WitnessResult w = corroborate(f, budget, options);
        if (w.found) result.witness = w;
    }
    return result;
}

CertificationResult certify_with_boundary_zeros(const BoundaryFunction& f, const ZeroFactorSet& zeros, int budget,
                                                const CertifyOptions& options) {
    if (budget < 0) throw Error(ErrorCode::BadParams, "pole budget must be >= 0");
    const CircleGrid& grid = f.grid();
    const double scale = f.max_modulus();

    BoundaryFunction g = f;
    if (!zeros.empty()) {
        const NewtonDecomposition dec = newton_decompose(f, zeros);
        const BoundaryFunction d_grid = poly_eval_on_grid(dec.jet_polynomial, grid);
        if (d_grid.max_modulus() > 1e-8 * scale) {
            throw Error(ErrorCode::BadParams, "f does not vanish to the declared order at the given zeros");
        }
        g = dec.remainder;
    }
    const int n = winding_number(g).winding;

    CertificationResult result;
    result.budget = budget;
    result.diagnostics.push_back("remainder_winding=" + std::to_string(n));

    auto refute_or_give_up = [&](CertificationStatus on_found) {
        if (options.corroborate) {
            WitnessResult w = corroborate(f, budget, options);
            if (w.found) {
                result.witness = w;
                result.status = on_found;
            }
        }
        return result;
    };

    if (n < -budget) {
        // g carries at least -N > J poles.
        result.status = CertificationStatus::Refuted;
        result.diagnostics.push_back("winding_below_budget");
        return refute_or_give_up(CertificationStatus::Refuted);
    }

    CertifyOptions inner = options;
    inner.corroborate = false;
    const BoundaryFunction h = g.reciprocal();
    const CertificationResult sub = certify_meromorphic_extension(h, zeros, n + budget, inner);
    for (const auto& line : sub.diagnostics) result.diagnostics.push_back("reciprocal_" + line);
    if (sub.status != CertificationStatus::Certified) return refute_or_give_up(CertificationStatus::Refuted);

    // Zeros of the extension E of 1/g are the poles of g: Z(E) = P(E) - N.
    const int count = sub.pole_count - n;
    std::vector<PoleEstimate> poles;
    if (count > 0) {
        const std::vector<Complex> moments = argument_moments(h, count);
        std::vector<Complex> sums(static_cast<std::size_t>(count));
        for (int k = 1; k <= count; ++k) {
            Complex s = moments[static_cast<std::size_t>(k)];
            for (const auto& p : sub.poles) s += static_cast<double>(p.multiplicity) * std::pow(p.location, k);
            sums[static_cast<std::size_t>(k - 1)] = s;
        }
        const std::vector<Complex> located = roots(from_power_sums(sums));
        poles = cluster_points(located, 1e-6);
    }

    MeromorphicExtension ext = *sub.extension;
    ext.reciprocal = true;
    ext.outer = node_product(zeros);
    result.residual = sup_relative(ext.on_grid(grid), f, scale);
    result.pole_count = std::max(count, 0);
    result.poles = std::move(poles);
    result.extension = std::move(ext);
    if (count <= budget && result.residual <= options.residual_tolerance) {
        result.status = CertificationStatus::Certified;
        return result;
    }
    if (result.residual > options.residual_tolerance) result.diagnostics.push_back("residual_too_large");
    return refute_or_give_up(CertificationStatus::Refuted);
}

CertificationResult classify_with_mixed_factors(const BoundaryFunction& f, const ZeroFactorSet& pi, int budget,
                                                const CertifyOptions& options) {
    if (budget < 0) throw Error(ErrorCode::BadParams, "pole budget must be >= 0");
    const ZeroFactorSet inside = pi.only(Location::Inside);
    const ZeroFactorSet boundary = pi.only(Location::Boundary);
    const int n = inside.total_multiplicity();
    const BoundaryFunction quotient = f * poly_eval_on_grid(node_product(inside), f.grid()).reciprocal();
    CertificationResult result = certify_meromorphic_extension(quotient, boundary, n + budget, options);
    result.diagnostics.push_back("inside_factors=" + std::to_string(n));
    result.diagnostics.push_back("outside_factors_dropped=" +
                                 std::to_string(pi.only(Location::Outside).total_multiplicity()));
    return result;
}

CertificationResult shift_criterion_test(const BoundaryFunction& f, int probe_budget, std::uint64_t seed) {
    const double norm = f.max_modulus();
    const double c = norm > 0.0 ? 2.0 * norm : 1.0;
    const BoundaryFunction shifted = f + Complex(c);
    const int w = winding_number(shifted).winding;
    if (w != 0) throw Error(ErrorCode::NonIntegerTotal, "shifted function has nonzero winding");

    CertificationResult result;
    result.diagnostics.push_back("shift=" + format_complex(Complex(c)));
    const BoundaryFunction h = shifted.reciprocal();
    if (holomorphic_test(h).first) {
        MeromorphicExtension ext;
        ext.analytic = analyze(f).analytic_part();
        const BoundaryFunction values = ext.on_grid(f.grid());
        result.residual = sup_relative(values, f, norm > 0.0 ? norm : 1.0);
        result.extension = std::move(ext);
        result.diagnostics.push_back("reciprocal_zero_count=" + std::to_string(zero_count(h, default_delta(h))));
        if (result.residual <= 1e-7) {
            result.status = CertificationStatus::Certified;
            return result;
        }
        result.diagnostics.push_back("residual_too_large");
    }
    ProbeFamily family;
    family.kind = ProbeKind::PfPlusOne;
    WitnessResult wr = witness_search(shifted, family, probe_budget, seed);
    if (wr.found) result.status = CertificationStatus::Refuted;
    result.witness = std::move(wr);
    return result;
}

}  // namespace windcert
