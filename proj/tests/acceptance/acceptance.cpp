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

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "windcert/catalog.hpp"
#include "windcert/criteria.hpp"
#include "windcert/decompose.hpp"
#include "windcert/error.hpp"
#include "windcert/extension.hpp"
#include "windcert/winding.hpp"

namespace {

using namespace windcert;
using testing::Gen;
using testing::sup_distance;

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

BoundaryFunction sampled(const std::function<Complex(Complex)>& fn, std::size_t n = 2048) {
    return BoundaryFunction::sample(CircleGrid(n), fn);
}

ZeroFactorSet nodes_of(std::initializer_list<std::pair<Complex, int>> pts) {
    ZeroFactorSet zf;
    for (auto [a, m] : pts) zf.add(a, m);
    return zf;
}

double nearest(const std::vector<PoleEstimate>& poles, Complex p) {
    double best = 1e300;
    for (const auto& e : poles) best = std::min(best, std::abs(e.location - p));
    return best;
}

void winding_exactness(Check& c, double& limit) {
    limit = 1.0;
    for (int n = -32; n <= 32; ++n) {
        const auto r = winding_number(sampled([n](Complex z) { return std::pow(z, n); }));
        c.require(r.winding == n, "W(z^" + std::to_string(n) + ")=" + std::to_string(r.winding));
    }
    c.detail << "65 monomials";
}

void argument_principle(Check& c, double&) {
    Gen gen(2001);
    int agree = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> zeros(static_cast<std::size_t>(gen.integer(0, 5)));
        std::vector<Complex> poles(static_cast<std::size_t>(gen.integer(0, 5)));
        int expected = 0;
        for (auto& z : zeros) {
            z = gen.off_circle(0.05);
            expected += std::abs(z) < 1.0 ? 1 : 0;
        }
        for (auto& p : poles) {
            p = gen.off_circle(0.05);
            expected -= std::abs(p) < 1.0 ? 1 : 0;
        }
        const Complex lead = gen.normal();
        const auto f = sampled([&](Complex z) {
            Complex v = lead;
            for (auto a : zeros) v *= z - a;
            for (auto b : poles) v /= z - b;
            return v;
        });
        const int w = winding_number(f).winding;
        agree += w == expected ? 1 : 0;
        c.require(w == expected, "trial " + std::to_string(trial));
    }
    c.detail << agree << "/200 agree";
}

void counterexample(Check& c, double& limit) {
    limit = 10.0;
    const auto f = sampled([](Complex z) { return z / (z - 0.5); });
    const int w = winding_number(f).winding;
    c.require(w == 0, "winding");
    const auto r = meromorphic_test(f, 1);
    c.require(std::abs(r.negative_energy - 1.0 / 3.0) <= 1e-10, "negative energy");
    c.require(r.verdict == Verdict::MeromorphicAtMost && r.pole_count == 1 && r.pole_estimates.size() == 1, "verdict");
    const double err = r.pole_estimates.empty() ? 1.0 : std::abs(r.pole_estimates[0].location - 0.5);
    c.require(err <= 1e-8, "pole location");
    ProbeFamily fam;
    fam.kind = ProbeKind::FPlusPiP;
    fam.factors = nodes_of({{0.0, 1}});
    const auto ws = witness_search(f, fam, 10000, 7);
    c.require(!ws.found, "witness found");
    c.detail << "W=" << w << " neg_energy_err=" << std::abs(r.negative_energy - 1.0 / 3.0) << " pole_err=" << err
             << " probes=" << ws.probes_tried << " skipped=" << ws.probes_skipped << " witness=" << ws.found;
}

void soundness(Check& c, double&) {
    ProbeFamily fam;
    int negative = 0;
    long valid_total = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const CatalogCase cc = random_case(CaseClass::Extendible, seed);
        const ProbeSequence seq(cc.f, fam, 1000 + seed);
        int valid = 0;
        for (std::uint64_t i = 0; valid < 200 && i < 2000; ++i) {
            const Polynomial p = seq(i);
            const BoundaryFunction comp = probe_composite(cc.f, p, fam);
            const double delta = default_delta(comp);
            if (!(comp.min_modulus() > delta)) continue;
            try {
                const int w = winding_number(comp, delta).winding;
                ++valid;
                if (w < 0) ++negative;
            } catch (const Error&) {
            }
        }
        c.require(valid == 200, "case " + std::to_string(seed) + " ran out of valid probes");
        valid_total += valid;
    }
    c.require(negative == 0, "negative windings");
    c.detail << valid_total << " valid probes, " << negative << " negative";
}

void completeness(Check& c, double&) {
    const auto f = sampled([](Complex z) { return std::conj(z); });
    const auto r = probe_winding(f, Polynomial{0.5, -1.0}, ProbeFamily{});
    c.require(r.winding == -1, "exact witness");
    int found = 0, worst = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto w = witness_search(f, ProbeFamily{}, 1000, seed);
        const bool ok = w.found && w.winding <= -1 && probe_winding(f, w.probe, ProbeFamily{}).winding == w.winding;
        found += ok ? 1 : 0;
        worst = std::max(worst, w.probes_tried);
        c.require(ok, "seed " + std::to_string(seed));
    }
    c.detail << "W(Pf+1)=" << r.winding << " found " << found << "/10 seeds, max probes " << worst;
}

void newton_round_trip(Check& c, double&) {
    Gen gen(4004);
    const CircleGrid grid(2048);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = synthesize(gen.band_limited(1023, gen.integer(5, 60), gen.uniform(0.4, 0.8)), grid);
        ZeroFactorSet zf;
        int budget = gen.integer(1, 6);
        while (budget > 0) {
            const int m = gen.integer(1, budget);
            zf.add(gen.on_circle(), m, Location::Boundary);
            budget -= m;
        }
        const auto d = newton_decompose(f, zf);
        const auto rebuilt =
            poly_eval_on_grid(d.jet_polynomial, grid) + poly_eval_on_grid(node_product(zf), grid) * d.remainder;
        const double rel = sup_distance(rebuilt, f) / f.max_modulus();
        worst = std::max(worst, rel);
        c.require(rel <= 1e-8, "trial " + std::to_string(trial));
    }
    c.detail << "max residual/||f|| = " << worst;
}

void riesz_exact(Check& c, double&) {
    Gen gen(5005);
    int exact = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = gen.band_limited(gen.integer(31, 1023), gen.integer(1, 31), gen.uniform(0.3, 1.0));
        const auto back = recombine(riesz_split(s));
        const bool ok = back.order() == s.order() &&
                        std::equal(s.coeffs().begin(), s.coeffs().end(), back.coeffs().begin(), back.coeffs().end());
        exact += ok ? 1 : 0;
        c.require(ok, "trial " + std::to_string(trial));
    }
    c.detail << exact << "/100 bit-identical";
}

void factorization(Check& c, double&) {
    Gen gen(6006);
    const CircleGrid grid(2048);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = gen.integer(-3, 3);
        const auto s = gen.band_limited(1023, gen.integer(1, 8), 0.5);
        const auto g = BoundaryFunction::sample(grid, [&](Complex z) { return std::pow(z, n) * std::exp(s.evaluate(z)); });
        const auto fz = factorize_nonvanishing(g, default_delta(g));
        const auto rebuilt = synthesize(fz.outer, grid) * synthesize(fz.conjugate, grid).conj() *
                             BoundaryFunction::sample(grid, [n](Complex z) { return std::pow(z, n); });
        const double rel = sup_distance(rebuilt, g) / g.max_modulus();
        worst = std::max(worst, rel);
        c.require(rel <= 1e-9, "residual trial " + std::to_string(trial));
        c.require(fz.winding == n && fz.outer_winding == 0 && fz.conjugate_winding == 0,
                  "windings trial " + std::to_string(trial));
    }
    c.detail << "max residual/||g|| = " << worst;
}

void rational_recovery(Check& c, double&) {
    Gen gen(7007);
    double worst_fit = 0.0, worst_pole = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int dq = gen.integer(1, 4);
        const int dp = gen.integer(0, 4);
        std::vector<Complex> den_roots, num_roots;
        while (static_cast<int>(den_roots.size()) < dq) {
            const Complex r = gen.integer(0, 1) == 0 ? gen.in_annulus(0.05, 0.9) : gen.in_annulus(1.1, 3.0);
            bool ok = true;
            for (auto q : den_roots) ok = ok && std::abs(q - r) > 0.1;
            if (ok) den_roots.push_back(r);
        }
        while (static_cast<int>(num_roots.size()) < dp) {
            const Complex r = gen.off_circle(0.05);
            bool ok = true;
            for (auto q : den_roots) ok = ok && std::abs(q - r) > 0.1;
            if (ok) num_roots.push_back(r);
        }
        const Complex lead = gen.normal();
        const auto f = sampled([&](Complex z) {
            Complex v = lead;
            for (auto a : num_roots) v *= z - a;
            for (auto b : den_roots) v /= z - b;
            return v;
        });
        try {
            const RationalFit fit = rational_recover(f, 4);
            const double rel = sup_distance(fit.model.on_grid(f.grid()), f) / f.max_modulus();
            worst_fit = std::max(worst_fit, rel);
            c.require(rel <= 1e-8, "fit trial " + std::to_string(trial));
            const auto poles = pole_locations(fit.model);
            int inside = 0;
            for (auto b : den_roots) {
                if (std::abs(b) < 1.0) {
                    ++inside;
                    const double e = nearest(poles, b);
                    worst_pole = std::max(worst_pole, e);
                    c.require(e <= 1e-6, "pole trial " + std::to_string(trial));
                }
            }
            c.require(total_multiplicity(poles) == inside, "pole count trial " + std::to_string(trial));
        } catch (const Error& e) {
            c.require(false, "trial " + std::to_string(trial) + ": " + e.what());
        }
    }
    c.detail << "max fit residual " << worst_fit << ", max pole error " << worst_pole;
}

void certification(Check& c, double&) {
    auto expect = [&](const std::string& label, const CertificationResult& r, CertificationStatus status, int poles) {
        c.require(r.status == status, label + " status " + std::string(to_string(r.status)));
        if (status == CertificationStatus::Certified) {
            c.require(r.pole_count == poles && r.residual <= 1e-7, label + " poles/residual");
        }
        c.detail << label << "=" << to_string(r.status) << "/" << r.pole_count << " ";
    };
    auto agree = [&](const std::string& label, const BoundaryFunction& f, const CertificationResult& r, int budget) {
        const auto h = meromorphic_test(f, budget);
        c.require(h.pole_count == r.pole_count, label + " Hankel count");
        for (const auto& p : h.pole_estimates) c.require(nearest(r.poles, p.location) <= 1e-6, label + " Hankel location");
    };

    const auto f1 = sampled([](Complex z) { return (z - 1.0) * (z - 1.0) / (1.0 - z / 3.0); });
    const auto r1 = certify_meromorphic_extension(f1, nodes_of({{1.0, 2}}), 0);
    expect("certify1", r1, CertificationStatus::Certified, 0);
    agree("certify1", f1, r1, 0);

    const auto f2 = sampled([](Complex z) { return (z - 1.0) / (z - 0.5); });
    const auto r2 = certify_meromorphic_extension(f2, nodes_of({{1.0, 1}}), 1);
    expect("certify2", r2, CertificationStatus::Certified, 1);
    c.require(!r2.poles.empty() && std::abs(r2.poles[0].location - 0.5) <= 1e-6, "certify2 pole at 0.5");
    agree("certify2", f2, r2, 1);

    const auto f3 = sampled([](Complex z) { return (z - 1.0) * std::conj(z); });
    const auto r3 = certify_meromorphic_extension(f3, nodes_of({{1.0, 1}}), 0);
    expect("certify3", r3, CertificationStatus::Inconclusive, 0);
    c.require(r3.witness && r3.witness->found, "certify3 witness");

    const auto g1 = sampled([](Complex z) { return (z - 1.0) * (z - 1.0) * (z + 2.0); });
    const auto p1 = certify_with_boundary_zeros(g1, nodes_of({{1.0, 2}}), 0);
    expect("pipeline1", p1, CertificationStatus::Certified, 0);
    agree("pipeline1", g1, p1, 0);

    const auto g2 = sampled([](Complex z) { return (z - 1.0) / (z - 1.0 / 3.0); });
    const auto p2 = certify_with_boundary_zeros(g2, nodes_of({{1.0, 1}}), 1);
    expect("pipeline2", p2, CertificationStatus::Certified, 1);
    c.require(!p2.poles.empty() && std::abs(p2.poles[0].location - 1.0 / 3.0) <= 1e-6, "pipeline2 pole at 1/3");
    agree("pipeline2", g2, p2, 1);

    const auto g3 = sampled([](Complex z) { return (z - 1.0) * std::exp(std::conj(z)); });
    const auto p3 = certify_with_boundary_zeros(g3, nodes_of({{1.0, 1}}), 0);
    c.require(p3.status != CertificationStatus::Certified, "pipeline3 certified");
    c.require(p3.witness && p3.witness->found, "pipeline3 witness");
    c.detail << "pipeline3=" << to_string(p3.status) << " witness=" << (p3.witness && p3.witness->found);
}

void shift_test(Check& c, double&) {
    int certified = 0;
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        const auto r = shift_criterion_test(random_case(CaseClass::Extendible, seed).f, 1000, seed);
        certified += r.status == CertificationStatus::Certified ? 1 : 0;
        c.require(r.status == CertificationStatus::Certified, "case " + std::to_string(seed));
    }
    const auto r = shift_criterion_test(sampled([](Complex z) { return std::conj(z); }), 1000, 1);
    c.require(r.witness && r.witness->found, "conj(z) witness");
    c.detail << certified << "/20 certified, conj(z) witness=" << (r.witness && r.witness->found);
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    struct Criterion {
        int id;
        const char* name;
        void (*run)(Check&, double&);
    };
    const std::vector<Criterion> criteria{
        {1, "winding exactness", winding_exactness},
        {2, "argument principle oracle", argument_principle},
        {3, "counterexample z/(z-1/2)", counterexample},
        {4, "soundness sweep", soundness},
        {5, "completeness witness", completeness},
        {6, "Newton decomposition round trip", newton_round_trip},
        {7, "Riesz split exactness", riesz_exact},
        {8, "zero-free factorization", factorization},
        {9, "rational recovery", rational_recovery},
        {10, "certification pipeline", certification},
        {11, "shift test", shift_test},
    };
    const auto suite_start = Clock::now();
    int failures = 0;
    for (const auto& cr : criteria) {
        Check check;
        double limit = 0.0;
        const auto start = Clock::now();
        try {
            cr.run(check, limit);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (limit > 0.0) check.require(secs < limit, "runtime over " + std::to_string(limit) + " s");
        failures += check.pass ? 0 : 1;
        std::printf("criterion %2d %s: %s (%.2f s) %s\n", cr.id, check.pass ? "PASS" : "FAIL", cr.name, secs,
                    check.detail.str().c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(Clock::now() - suite_start).count();
    const bool in_time = total < 120.0;
    std::printf("suite wall-clock %.2f s (limit 120 s): %s\n", total, in_time ? "PASS" : "FAIL");
    return failures == 0 && in_time ? 0 : 1;
}
