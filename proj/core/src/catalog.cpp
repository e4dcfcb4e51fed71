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

#include "windcert/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "windcert/error.hpp"
#include "windcert/io.hpp"
#include "windcert/polynomial.hpp"

namespace windcert {

namespace {

constexpr std::array kEntries{
    CatalogEntry{"monomial", "n=1", "z^n"},
    CatalogEntry{"conj_z", "", "conjugate of z"},
    CatalogEntry{"rational", "num=1 den=1", "ratio of polynomials, ascending coefficient lists"},
    CatalogEntry{"blaschke", "zeros=0", "finite Blaschke product with zeros inside the disc"},
    CatalogEntry{"paper_7_counterexample", "", "z/(z-1/2)"},
    CatalogEntry{"nonvanishing_winding", "n=1", "e^{in theta}(2+cos theta)"},
    CatalogEntry{"boundary_zero_times", "nodes=1 base=monomial base.*",
                 "product of (z-a)^m over boundary nodes times another catalog case"},
    CatalogEntry{"smooth_bump", "width=0.5", "exp((cos theta - 1)/width^2)"},
};

class ParamReader {
public:
    ParamReader(std::string_view name, const CaseParams& params) : name_(name), params_(params) {}

    std::string_view text(std::string_view key, std::string_view fallback) {
        used_.insert(std::string(key));
        const auto it = params_.find(key);
        return it == params_.end() ? fallback : std::string_view(it->second);
    }

    int integer(std::string_view key, int fallback) {
        const auto it = params_.find(key);
        used_.insert(std::string(key));
        if (it == params_.end()) return fallback;
        int v = 0;
        const auto& s = it->second;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) bad(key, s);
        return v;
    }

    double real(std::string_view key, double fallback) {
        const auto it = params_.find(key);
        used_.insert(std::string(key));
        if (it == params_.end()) return fallback;
        try {
            const Complex v = parse_complex(it->second);
            if (v.imag() != 0.0) bad(key, it->second);
            return v.real();
        } catch (const Error&) {
            bad(key, it->second);
        }
    }

    std::vector<Complex> list(std::string_view key, std::string_view fallback) {
        const std::string_view s = text(key, fallback);
        try {
            return parse_complex_list(s);
        } catch (const Error&) {
            bad(key, s);
        }
    }

    /// Parameters with the given prefix, prefix stripped.
    CaseParams nested(std::string_view prefix) {
        CaseParams out;
        for (const auto& [k, v] : params_) {
            if (k.size() > prefix.size() && k.compare(0, prefix.size(), prefix) == 0) {
                out.emplace(k.substr(prefix.size()), v);
                used_.insert(k);
            }
        }
        return out;
    }

    void finish() const {
        for (const auto& [k, v] : params_) {
            if (!used_.contains(k)) {
                throw Error(ErrorCode::BadParams, "case " + std::string(name_) + " has no parameter '" + k + "'");
            }
        }
    }

    [[noreturn]] void bad(std::string_view key, std::string_view value) const {
        throw Error(ErrorCode::BadParams,
                    "bad value '" + std::string(value) + "' for " + std::string(name_) + "." + std::string(key));
    }

private:
    std::string_view name_;
    const CaseParams& params_;
    std::set<std::string, std::less<>> used_;
};

int count_inside(const std::vector<Complex>& pts) {
    return static_cast<int>(std::count_if(pts.begin(), pts.end(), [](Complex p) { return std::abs(p) < 1.0; }));
}

CatalogCase monomial(int n, const CircleGrid& grid) {
    CaseTruth t;
    t.extendible = n >= 0;
    t.pole_budget = std::max(0, -n);
    t.winding = n;
    return {"monomial", BoundaryFunction::sample(grid, [n](Complex z) { return std::pow(z, n); }), std::move(t)};
}

CatalogCase rational(ParamReader& p, const CircleGrid& grid) {
    const Polynomial num(p.list("num", "1"));
    const Polynomial den(p.list("den", "1"));
    if (den.is_zero()) p.bad("den", "0");
    const std::vector<Complex> zr = num.is_zero() ? std::vector<Complex>{} : roots(num);
    const std::vector<Complex> pr = roots(den);
    constexpr double gap = 1e-6;
    for (const Complex r : pr) {
        if (std::abs(std::abs(r) - 1.0) < gap) throw Error(ErrorCode::BadParams, "denominator root on the circle");
        for (const Complex z : zr) {
            if (std::abs(z - r) < gap) throw Error(ErrorCode::BadParams, "numerator and denominator share a root");
        }
    }
    CaseTruth t;
    t.pole_budget = count_inside(pr);
    t.extendible = *t.pole_budget == 0;
    const bool boundary_zero =
        num.is_zero() || std::any_of(zr.begin(), zr.end(), [](Complex z) { return std::abs(std::abs(z) - 1.0) < gap; });
    if (!boundary_zero) t.winding = count_inside(zr) - count_inside(pr);
    auto f = BoundaryFunction::sample(grid, [&](Complex z) { return num(z) / den(z); });
    return {"rational", std::move(f), std::move(t)};
}

CatalogCase blaschke(ParamReader& p, const CircleGrid& grid) {
    const std::vector<Complex> zeros = p.list("zeros", "0");
    for (const Complex a : zeros) {
        if (!(std::abs(a) < 1.0)) throw Error(ErrorCode::BadParams, "Blaschke zeros must lie inside the disc");
    }
    CaseTruth t;
    t.extendible = true;
    t.pole_budget = 0;
    t.winding = static_cast<int>(zeros.size());
    auto f = BoundaryFunction::sample(grid, [&](Complex z) {
        Complex v = 1.0;
        for (const Complex a : zeros) v *= (z - a) / (1.0 - std::conj(a) * z);
        return v;
    });
    return {"blaschke", std::move(f), std::move(t)};
}

// e^{in theta}(2 + cos theta) = z^{n-1}(z^2 + 4z + 1)/2 on the circle.
CatalogCase nonvanishing_winding(int n, const CircleGrid& grid) {
    CaseTruth t;
    t.extendible = n >= 1;
    t.pole_budget = std::max(0, 1 - n);
    t.winding = n;
    auto f = BoundaryFunction::sample(grid, [n](Complex z) { return std::pow(z, n) * (2.0 + z.real()); });
    return {"nonvanishing_winding", std::move(f), std::move(t)};
}

CatalogCase smooth_bump(double width, const CircleGrid& grid) {
    if (!(width > 0.0)) throw Error(ErrorCode::BadParams, "width must be positive");
    CaseTruth t;
    t.winding = 0;
    const double s = 1.0 / (width * width);
    auto f = BoundaryFunction::sample(grid, [s](Complex z) { return Complex(std::exp((z.real() - 1.0) * s)); });
    return {"smooth_bump", std::move(f), std::move(t)};
}

CatalogCase dispatch(std::string_view name, const CaseParams& params, const CircleGrid& grid, int depth) {
    ParamReader p(name, params);
    CatalogCase c = [&]() -> CatalogCase {
        if (name == "monomial") return monomial(p.integer("n", 1), grid);
        if (name == "conj_z") {
            CatalogCase m = monomial(-1, grid);
            m.name = "conj_z";
            return m;
        }
        if (name == "rational") return rational(p, grid);
        if (name == "blaschke") return blaschke(p, grid);
        if (name == "paper_7_counterexample") {
            CaseTruth t;
            t.pole_budget = 1;
            t.winding = 0;
            return {"paper_7_counterexample", BoundaryFunction::sample(grid, [](Complex z) { return z / (z - 0.5); }),
                    std::move(t)};
        }
        if (name == "nonvanishing_winding") return nonvanishing_winding(p.integer("n", 1), grid);
        if (name == "smooth_bump") return smooth_bump(p.real("width", 0.5), grid);
        if (name == "boundary_zero_times") {
            if (depth > 0) throw Error(ErrorCode::BadParams, "boundary_zero_times cannot be nested");
            const std::string_view nodes_text = p.text("nodes", "1");
            const std::string base_name(p.text("base", "monomial"));
            CaseParams base_params = p.nested("base.");
            if (base_name == "monomial" && !base_params.contains("n")) base_params.emplace("n", "0");
            ZeroFactorSet nodes;
            try {
                nodes = parse_factor_list(nodes_text);
            } catch (const Error&) {
                p.bad("nodes", nodes_text);
            }
            if (!nodes.all_at(Location::Boundary)) throw Error(ErrorCode::BadParams, "nodes must lie on the circle");
            CatalogCase base = dispatch(base_name, base_params, grid, depth + 1);
            CaseTruth t = base.truth;
            if (!nodes.empty()) t.winding.reset();
            t.boundary_zeros = nodes;
            const BoundaryFunction pi = poly_eval_on_grid(node_product(nodes), grid);
            return {"boundary_zero_times", pi * base.f, std::move(t)};
        }
        throw Error(ErrorCode::UnknownCase, "unknown catalog case '" + std::string(name) + "'");
    }();
    p.finish();
    return c;
}

Complex in_disc(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = std::sqrt(lo * lo + (hi * hi - lo * lo) * u(rng));
    return std::polar(r, 2.0 * std::numbers::pi * u(rng));
}

Complex gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    const double re = d(rng);
    return {re, d(rng)};
}

}  // namespace

std::span<const CatalogEntry> catalog_entries() noexcept { return kEntries; }

CatalogCase make_case(std::string_view name, const CaseParams& params, const CircleGrid& grid) {
    return dispatch(name, params, grid, 0);
}

std::string_view to_string(CaseClass c) noexcept {
    switch (c) {
        case CaseClass::Extendible: return "extendible";
        case CaseClass::Meromorphic: return "meromorphic";
        case CaseClass::NonExtendible: return "nonextendible";
    }
    return "unknown";
}

CatalogCase random_case(CaseClass cls, std::uint64_t seed, const CircleGrid& grid, int poles) {
    if (cls == CaseClass::Meromorphic && poles < 0) throw Error(ErrorCode::BadParams, "pole count must be >= 0");
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(cls)};
    std::mt19937_64 rng(seq);

    // Polynomial with roots at least 0.05 from the circle, times exp of an analytic polynomial.
    const int degree = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<Complex> zeros;
    for (int k = 0; k < degree; ++k) {
        zeros.push_back(std::bernoulli_distribution(0.5)(rng) ? in_disc(rng, 0.0, 0.95) : in_disc(rng, 1.05, 2.5));
    }
    std::vector<Complex> expo(static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 3)(rng)) + 1);
    for (auto& c : expo) c = 0.3 * gaussian(rng);
    const Complex lead = std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
    const Polynomial numer = lead * Polynomial::from_roots(zeros);
    const Polynomial exponent(expo);

    std::vector<Complex> denom_roots;
    if (cls == CaseClass::Meromorphic) {
        while (static_cast<int>(denom_roots.size()) < poles) {
            const Complex p = in_disc(rng, 0.0, 0.8);
            bool ok = true;
            for (const Complex q : denom_roots) ok = ok && std::abs(p - q) > 0.1;
            for (const Complex q : zeros) ok = ok && std::abs(p - q) > 0.1;
            if (ok) denom_roots.push_back(p);
        }
    }
    const Polynomial denom = Polynomial::from_roots(denom_roots);

    int anti_power = 0;
    double eps = 0.0;
    if (cls == CaseClass::NonExtendible) {
        anti_power = std::uniform_int_distribution<int>(1, 3)(rng);
        eps = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    }

    auto f = BoundaryFunction::sample(grid, [&](Complex z) {
        Complex v = numer(z) * std::exp(exponent(z)) / denom(z);
        if (anti_power > 0) v += eps * std::pow(std::conj(z), anti_power);
        return v;
    });

    CaseTruth t;
    switch (cls) {
        case CaseClass::Extendible:
            t.extendible = true;
            t.pole_budget = 0;
            t.winding = count_inside(zeros);
            break;
        case CaseClass::Meromorphic:
            t.extendible = poles == 0;
            t.pole_budget = poles;
            t.winding = count_inside(zeros) - poles;
            break;
        case CaseClass::NonExtendible:
            t.pole_budget = anti_power;
            break;
    }
    std::string name = "random_" + std::string(to_string(cls)) + "_" + std::to_string(seed);
    return {std::move(name), std::move(f), std::move(t)};
}

}  // namespace windcert
