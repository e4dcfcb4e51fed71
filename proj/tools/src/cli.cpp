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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "windcert/catalog.hpp"
#include "windcert/criteria.hpp"
#include "windcert/decompose.hpp"
#include "windcert/error.hpp"
#include "windcert/extension.hpp"
#include "windcert/io.hpp"
#include "windcert/winding.hpp"

namespace windcert::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string path;
    std::string catalog;
    std::vector<std::string> params;
    std::size_t grid = CircleGrid::kDefaultSize;
    double delta_rel = 1e-9;
    CLI::Option* grid_option = nullptr;
};

void add_input(CLI::App* cmd, Input& in) {
    auto* path = cmd->add_option("--in", in.path, "samples CSV (theta,re,im)");
    auto* cat = cmd->add_option("--catalog", in.catalog, "catalog case name");
    path->excludes(cat);
    cmd->add_option("--param", in.params, "catalog parameter key=value")->needs(cat);
    in.grid_option = cmd->add_option("--grid", in.grid, "grid size, power of two in [64, 16384]")
                         ->check([](const std::string& s) -> std::string {
                             std::size_t n = 0;
                             try {
                                 n = std::stoul(s);
                             } catch (...) {
                                 return "grid must be an integer";
                             }
                             if (n < 64 || n > 16384 || (n & (n - 1)) != 0) return "grid must be a power of two in [64, 16384]";
                             return {};
                         });
    cmd->add_option("--delta-rel", in.delta_rel, "zero guard relative to max |f|")
        ->check(CLI::PositiveNumber);
}

CaseParams parse_params(const std::vector<std::string>& items) {
    CaseParams out;
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + item + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

BoundaryFunction load(const Input& in) {
    if (!in.path.empty()) {
        std::optional<std::size_t> grid;
        if (in.grid_option->count() > 0) grid = in.grid;
        return read_samples_csv(in.path, grid);
    }
    if (in.catalog.empty()) throw UsageError("one of --in or --catalog is required");
    return make_case(in.catalog, parse_params(in.params), CircleGrid(in.grid)).f;
}

double delta_for(const Input& in, const BoundaryFunction& f) { return in.delta_rel * f.max_modulus(); }

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error(ErrorCode::BadInput, "cannot write " + path);
    os.precision(17);
    return os;
}

std::string coeff_list(const Polynomial& p) {
    std::string s;
    for (int k = 0; k <= std::max(p.degree(), 0); ++k) {
        if (k > 0) s += ',';
        s += format_complex(p.coeff(k));
    }
    return s;
}

void print_poles(std::ostream& out, const std::vector<PoleEstimate>& poles) {
    for (std::size_t i = 0; i < poles.size(); ++i) {
        out << "pole[" << i << "]=" << format_complex(poles[i].location) << " multiplicity=" << poles[i].multiplicity
            << '\n';
    }
}

void print_witness(std::ostream& out, const WitnessResult& w) {
    out << "witness_found=" << (w.found ? "true" : "false") << '\n';
    if (w.found) {
        out << "witness_probe=" << coeff_list(w.probe) << '\n';
        out << "witness_winding=" << w.winding << '\n';
        out << "witness_min_modulus=" << w.min_modulus << '\n';
    } else {
        out << "message=no witness found in " << w.probes_tried << " probes\n";
    }
    out << "probes_tried=" << w.probes_tried << '\n';
    out << "probes_skipped=" << w.probes_skipped << '\n';
    out << "seed=" << w.seed << '\n';
}

int print_certification(std::ostream& out, const CertificationResult& r) {
    out << "status=" << to_string(r.status) << '\n';
    out << "budget=" << r.budget << '\n';
    if (r.extension) {
        out << "pole_count=" << r.pole_count << '\n';
        out << "residual=" << r.residual << '\n';
        print_poles(out, r.poles);
    }
    for (const auto& d : r.diagnostics) out << "diagnostic=" << d << '\n';
    if (r.witness) print_witness(out, *r.witness);
    if (r.status == CertificationStatus::Certified) return kExitOk;
    if (r.witness && r.witness->found) return kExitWitness;
    return kExitInconclusive;
}

// --------------------------------------------------------------- commands

int cmd_winding(const Input& in, const std::string& trace, std::ostream& out) {
    const BoundaryFunction f = load(in);
    const WindingReport r = winding_number(f, delta_for(in, f));
    out << "winding=" << r.winding << '\n';
    out << "raw_phase_turns=" << r.raw_phase_turns << '\n';
    out << "min_modulus=" << r.min_modulus << '\n';
    out << "max_phase_step=" << r.max_phase_step << '\n';
    out << "grid_n=" << r.grid_n << '\n';
    if (!trace.empty()) {
        auto os = open_out(trace);
        const auto phase = cumulative_phase(f);
        os << "theta,phase\n";
        for (std::size_t j = 0; j < phase.size(); ++j) os << f.grid().angle(j) << ',' << phase[j] << '\n';
    }
    return kExitOk;
}

int cmd_fourier(const Input& in, int terms, const std::string& path, std::ostream& out) {
    const FourierSeries s = analyze(load(in));
    out << "order=" << s.order() << '\n';
    out << "energy=" << s.energy() << '\n';
    out << "negative_energy=" << s.negative_energy() << '\n';
    out << "max_coeff=" << s.max_coeff() << '\n';
    out << "top_decile_energy=" << s.top_decile_energy() << '\n';
    const int k_max = std::min(terms, s.order());
    for (int k = -k_max; k <= k_max; ++k) out << "c[" << k << "]=" << format_complex(s.coeff(k)) << '\n';
    if (!path.empty()) {
        auto os = open_out(path);
        os << "k,re,im\n";
        for (int k = -s.order(); k <= s.order(); ++k) os << k << ',' << s.coeff(k).real() << ',' << s.coeff(k).imag() << '\n';
    }
    return kExitOk;
}

int cmd_extend(const Input& in, int budget, const std::string& poles_path, std::ostream& out) {
    const BoundaryFunction f = load(in);
    const ExtensionReport r = meromorphic_test(f, budget);
    out << "verdict=" << to_string(r.verdict) << '\n';
    out << "pole_count=" << r.pole_count << '\n';
    out << "pole_bound=" << r.pole_bound << '\n';
    out << "budget=" << budget << '\n';
    out << "negative_energy=" << r.negative_energy << '\n';
    out << "total_energy=" << r.total_energy << '\n';
    for (std::size_t i = 0; i < std::min<std::size_t>(r.hankel_singular_values.size(), 8); ++i) {
        out << "sigma[" << i << "]=" << r.hankel_singular_values[i] << '\n';
    }
    print_poles(out, r.pole_estimates);
    if (!poles_path.empty()) {
        auto os = open_out(poles_path);
        os << "re,im,multiplicity\n";
        for (const auto& p : r.pole_estimates) os << p.location.real() << ',' << p.location.imag() << ',' << p.multiplicity << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const Input& in, const std::string& nodes, const std::string& path, std::ostream& out) {
    const BoundaryFunction f = load(in);
    const NewtonDecomposition d = newton_decompose(f, parse_factor_list(nodes));
    out << "node_count=" << d.node_sequence.size() << '\n';
    for (std::size_t k = 0; k < d.coeffs.size(); ++k) out << "A[" << k << "]=" << format_complex(d.coeffs[k]) << '\n';
    out << "jet_polynomial=" << coeff_list(d.jet_polynomial) << '\n';
    const BoundaryFunction rebuilt =
        poly_eval_on_grid(d.jet_polynomial, f.grid()) + poly_eval_on_grid(node_product(d.nodes), f.grid()) * d.remainder;
    double residual = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) residual = std::max(residual, std::abs(rebuilt[j] - f[j]));
    out << "residual=" << (f.max_modulus() > 0.0 ? residual / f.max_modulus() : residual) << '\n';
    if (!d.smoothness_note.empty()) out << "smoothness_note=" << d.smoothness_note << '\n';
    if (!path.empty()) {
        auto os = open_out(path);
        write_samples_csv(os, d.remainder);
    }
    return kExitOk;
}

int cmd_factorize(const Input& in, int terms, std::ostream& out) {
    const BoundaryFunction g = load(in);
    const Factorization fz = factorize_nonvanishing(g, delta_for(in, g));
    out << "winding=" << fz.winding << '\n';
    out << "outer_winding=" << fz.outer_winding << '\n';
    out << "conjugate_winding=" << fz.conjugate_winding << '\n';
    out << "grid_n=" << fz.grid_n << '\n';
    for (int k = 0; k <= std::min(terms, fz.outer.order()); ++k) out << "F[" << k << "]=" << format_complex(fz.outer.coeff(k)) << '\n';
    for (int k = 0; k <= std::min(terms, fz.conjugate.order()); ++k) {
        out << "G[" << k << "]=" << format_complex(fz.conjugate.coeff(k)) << '\n';
    }
    return kExitOk;
}

ProbeKind parse_family(const std::string& s) {
    if (s == "pf1") return ProbeKind::PfPlusOne;
    if (s == "fpip") return ProbeKind::FPlusPiP;
    throw UsageError("--family must be pf1 or fpip");
}

struct WitnessArgs {
    std::string family = "pf1";
    int budget_j = 0;
    int probes = 10000;
    int max_degree = 16;
    std::string pi;
    std::size_t threads = 0;
};

int cmd_witness(const Input& in, const WitnessArgs& a, std::uint64_t seed, std::ostream& out) {
    const BoundaryFunction f = load(in);
    ProbeFamily fam;
    fam.kind = parse_family(a.family);
    fam.factors = parse_factor_list(a.pi);
    fam.budget = a.budget_j;
    fam.max_degree = a.max_degree;
    const WitnessResult w = witness_search(f, fam, a.probes, seed, WitnessOptions{a.threads, 64});
    out << "family=" << to_string(fam.kind) << '\n';
    out << "budget_j=" << a.budget_j << '\n';
    print_witness(out, w);
    return w.found ? kExitWitness : kExitOk;
}

struct CertifyArgs {
    std::string nodes;
    std::string zeros;
    int budget = 0;
    int probes = 2000;
    bool strict = false;
    bool no_witness = false;
};

CertifyOptions certify_options(const CertifyArgs& a, std::uint64_t seed) {
    CertifyOptions o;
    o.strict_node_values = a.strict;
    o.corroborate = !a.no_witness;
    o.witness_probes = a.probes;
    o.seed = seed;
    return o;
}

int cmd_certify(const Input& in, const CertifyArgs& a, std::uint64_t seed, std::ostream& out) {
    const BoundaryFunction f = load(in);
    const CertifyOptions o = certify_options(a, seed);
    if (!a.zeros.empty()) {
        out << "mode=boundary_zeros\n";
        return print_certification(out, certify_with_boundary_zeros(f, parse_factor_list(a.zeros), a.budget, o));
    }
    out << "mode=nodes\n";
    return print_certification(out, certify_meromorphic_extension(f, parse_factor_list(a.nodes), a.budget, o));
}

int cmd_classify(const Input& in, const std::string& pi, const CertifyArgs& a, std::uint64_t seed, std::ostream& out) {
    const BoundaryFunction f = load(in);
    return print_certification(out, classify_with_mixed_factors(f, parse_factor_list(pi), a.budget, certify_options(a, seed)));
}

int cmd_shift(const Input& in, int probes, std::uint64_t seed, std::ostream& out) {
    return print_certification(out, shift_criterion_test(load(in), probes, seed));
}

int cmd_catalog_list(std::ostream& out) {
    for (const auto& e : catalog_entries()) {
        out << "case=" << e.name << " params=" << (e.params.empty() ? "-" : e.params) << " summary=" << e.summary
            << '\n';
    }
    return kExitOk;
}

int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& params, std::size_t grid,
                     const std::string& path, std::ostream& out) {
    const CatalogCase c = make_case(name, parse_params(params), CircleGrid(grid));
    out << "case=" << c.name << '\n';
    out << "grid_n=" << c.f.size() << '\n';
    out << "extendible=" << (c.truth.extendible ? "true" : "false") << '\n';
    out << "pole_budget=" << (c.truth.pole_budget ? std::to_string(*c.truth.pole_budget) : "none") << '\n';
    out << "winding=" << (c.truth.winding ? std::to_string(*c.truth.winding) : "undefined") << '\n';
    if (!path.empty()) {
        auto os = open_out(path);
        write_samples_csv(os, c.f);
        out << "written=" << path << '\n';
    }
    return kExitOk;
}

// ------------------------------------------------------------ reproduce

int reproduce_counterexample(std::uint64_t seed, std::ostream& out) {
    const CatalogCase c = make_case("paper_7_counterexample");
    const BoundaryFunction& f = c.f;
    const int w = winding_number(f).winding;
    const ExtensionReport r = meromorphic_test(f, 1);
    ZeroFactorSet pi;
    pi.add(0.0, 1);
    ProbeFamily fam{ProbeKind::FPlusPiP, pi, 16, 0};
    const WitnessResult wr = witness_search(f, fam, 10000, seed);
    out << "scenario=paper-7\n";
    out << "f=z/(z-1/2)\n";
    out << "winding=" << w << '\n';
    out << "holomorphic=" << (holomorphic_test(f).first ? "true" : "false") << '\n';
    out << "negative_energy=" << r.negative_energy << '\n';
    out << "verdict=" << to_string(r.verdict) << '\n';
    out << "pole_count=" << r.pole_count << '\n';
    print_poles(out, r.pole_estimates);
    out << "family=fpip pi=z budget_j=0\n";
    print_witness(out, wr);
    const bool ok = w == 0 && r.verdict == Verdict::MeromorphicAtMost && r.pole_count == 1 && !wr.found;
    out << "consistent=" << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitInconclusive;
}

int reproduce_zero_free(std::uint64_t seed, std::ostream& out) {
    const CircleGrid grid;
    const auto good = BoundaryFunction::sample(grid, [](Complex z) { return std::exp(z) * (3.0 + z); });
    const auto bad = BoundaryFunction::sample(grid, [](Complex z) { return 2.0 + std::conj(z); });
    out << "scenario=prop-2-1\n";
    bool ok = true;
    for (const auto& [label, f, extendible] :
         {std::tuple{"exp(z)(3+z)", good, true}, std::tuple{"2+conj(z)", bad, false}}) {
        const Reduction red = reduce_nonvanishing(f, default_delta(f));
        const bool holo = holomorphic_test(red.reciprocal).first;
        const WitnessResult wr = witness_search(f, ProbeFamily{}, 2000, seed);
        out << "case=" << label << '\n';
        out << "winding=" << red.shift << '\n';
        out << "reciprocal_holomorphic=" << (holo ? "true" : "false") << '\n';
        print_witness(out, wr);
        ok = ok && red.shift == 0 && holo == extendible && wr.found == !extendible;
    }
    out << "consistent=" << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitInconclusive;
}

int reproduce_shift(std::uint64_t seed, std::ostream& out) {
    out << "scenario=thm-8-2\n";
    const CircleGrid grid;
    const auto sq = shift_criterion_test(BoundaryFunction::sample(grid, [](Complex z) { return z * z; }), 1000, seed);
    const auto cj = shift_criterion_test(BoundaryFunction::sample(grid, [](Complex z) { return std::conj(z); }), 1000, seed);
    out << "case=z^2\n";
    print_certification(out, sq);
    out << "case=conj(z)\n";
    print_certification(out, cj);
    const bool ok = sq.status == CertificationStatus::Certified && cj.status == CertificationStatus::Refuted;
    out << "consistent=" << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitInconclusive;
}

int reproduce_decomposition(std::ostream& out) {
    out << "scenario=lemma-4-4\n";
    const auto f = BoundaryFunction::sample(CircleGrid(), [](Complex z) {
        return std::exp(z) + 0.3 * std::conj(z) * std::conj(z) + 1.0 / (z - 0.4);
    });
    const ZeroFactorSet nodes = parse_factor_list("1:2,-1:1,0.6+0.8i:1");
    out << "f=exp(z)+0.3conj(z)^2+1/(z-0.4)\n";
    out << "nodes=1:2,-1:1,0.6+0.8i:1\n";
    const NewtonDecomposition d = newton_decompose(f, nodes);
    for (std::size_t k = 0; k < d.coeffs.size(); ++k) out << "A[" << k << "]=" << format_complex(d.coeffs[k]) << '\n';
    const BoundaryFunction rebuilt =
        poly_eval_on_grid(d.jet_polynomial, f.grid()) + poly_eval_on_grid(node_product(nodes), f.grid()) * d.remainder;
    double residual = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) residual = std::max(residual, std::abs(rebuilt[j] - f[j]));
    residual /= f.max_modulus();
    out << "residual=" << residual << '\n';
    const bool ok = residual <= 1e-8;
    out << "consistent=" << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitInconclusive;
}

int cmd_reproduce(const std::string& key, std::uint64_t seed, std::ostream& out) {
    if (key == "paper-7") return reproduce_counterexample(seed, out);
    if (key == "prop-2-1") return reproduce_zero_free(seed, out);
    if (key == "thm-8-2") return reproduce_shift(seed, out);
    if (key == "lemma-4-4") return reproduce_decomposition(out);
    throw UsageError("unknown scenario '" + key + "' (paper-7, prop-2-1, thm-8-2, lemma-4-4)");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("WINDCERT_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw UsageError("WINDCERT_SEED must be a non-negative integer");
        }
    }
    return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Winding-number certificates for extendibility of boundary functions", "windcert"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "windcert 0.1.0");

    std::uint64_t seed = 1;
    std::string trace, path, nodes, pi, key, name;
    int terms = 8;
    int budget = 0;
    int probes = 1000;
    std::size_t grid = CircleGrid::kDefaultSize;
    std::vector<std::string> params;
    WitnessArgs wargs;
    CertifyArgs cargs;

    Input in_winding, in_fourier, in_extend, in_decompose, in_factorize, in_witness, in_certify, in_classify, in_shift;

    auto add_seed = [&seed](CLI::App* c) { return c->add_option("--seed", seed, "RNG seed (default $WINDCERT_SEED or 1)"); };

    auto* winding = app.add_subcommand("winding", "winding number of the samples");
    add_input(winding, in_winding);
    winding->add_option("--trace", trace, "write cumulative phase CSV");

    auto* fourier = app.add_subcommand("fourier", "Fourier coefficients and energies");
    add_input(fourier, in_fourier);
    fourier->add_option("--terms", terms, "print c_k for |k| <= terms")->check(CLI::NonNegativeNumber);
    fourier->add_option("--out", path, "write all coefficients as CSV");

    auto* extend = app.add_subcommand("extend", "Hankel test for a meromorphic extension");
    add_input(extend, in_extend);
    extend->add_option("--budget", budget, "pole budget J")->check(CLI::NonNegativeNumber);
    extend->add_option("--poles", path, "write pole estimates as CSV");

    auto* decompose = app.add_subcommand("decompose", "Newton decomposition at boundary nodes");
    add_input(decompose, in_decompose);
    decompose->add_option("--nodes", nodes, "nodes a:m,...")->required();
    decompose->add_option("--out", path, "write remainder samples as CSV");

    auto* factorize = app.add_subcommand("factorize", "z^N F conj(G) factorization of a zero-free function");
    add_input(factorize, in_factorize);
    factorize->add_option("--terms", terms, "coefficients to print")->check(CLI::NonNegativeNumber);

    auto* witness = app.add_subcommand("witness", "search for a violating probe polynomial");
    add_input(witness, in_witness);
    witness->add_option("--family", wargs.family, "pf1 (P f + 1) or fpip (f + Pi p)");
    witness->add_option("--budget-j", wargs.budget_j, "pole budget J")->check(CLI::NonNegativeNumber);
    witness->add_option("--probes", wargs.probes, "number of probes")->check(CLI::PositiveNumber);
    witness->add_option("--max-degree", wargs.max_degree, "probe degree bound")->check(CLI::NonNegativeNumber);
    witness->add_option("--pi", wargs.pi, "factors of Pi, a:m[:in|bd|out],...");
    witness->add_option("--threads", wargs.threads, "worker threads (0 = hardware)");
    add_seed(witness);

    auto add_certify_flags = [&](CLI::App* c) {
        c->add_option("--budget", cargs.budget, "pole budget J")->check(CLI::NonNegativeNumber);
        c->add_option("--probes", cargs.probes, "probes for witness corroboration")->check(CLI::PositiveNumber);
        c->add_flag("--strict-nodes", cargs.strict, "fail when f vanishes at a node");
        c->add_flag("--no-witness", cargs.no_witness, "skip witness corroboration");
        add_seed(c);
    };

    auto* certify = app.add_subcommand("certify", "certify a meromorphic extension");
    add_input(certify, in_certify);
    auto* nodes_opt = certify->add_option("--nodes", cargs.nodes, "boundary interpolation nodes a:m,...");
    certify->add_option("--zeros", cargs.zeros, "declared boundary zeros a:m,... (zero-deflation pipeline)")
        ->excludes(nodes_opt);
    add_certify_flags(certify);

    auto* classify = app.add_subcommand("classify", "classify with mixed-location factors");
    add_input(classify, in_classify);
    classify->add_option("--pi", pi, "factors a:m:in|bd|out,...")->required();
    add_certify_flags(classify);

    auto* shift = app.add_subcommand("shift-test", "constant-shift holomorphy test");
    add_input(shift, in_shift);
    shift->add_option("--probes", probes, "witness probes")->check(CLI::PositiveNumber);
    add_seed(shift);

    auto* catalog = app.add_subcommand("catalog", "built-in test functions");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "list registered cases");
    auto* emit = catalog->add_subcommand("emit", "sample a case");
    emit->add_option("name", name, "case name")->required();
    emit->add_option("--param", params, "parameter key=value");
    emit->add_option("--grid", grid, "grid size")->check(CLI::IsMember({64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384}));
    emit->add_option("--out", path, "write samples CSV");

    auto* reproduce = app.add_subcommand("reproduce", "run a named scenario");
    reproduce->add_option("scenario", key, "paper-7 | prop-2-1 | thm-8-2 | lemma-4-4")->required();
    add_seed(reproduce);

    const auto old_precision = out.precision(12);
    try {
        seed = default_seed();
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        out.precision(old_precision);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        out.precision(old_precision);
        return kExitUsage;
    }

    int code = kExitOk;
    try {
        if (*winding) code = cmd_winding(in_winding, trace, out);
        else if (*fourier) code = cmd_fourier(in_fourier, terms, path, out);
        else if (*extend) code = cmd_extend(in_extend, budget, path, out);
        else if (*decompose) code = cmd_decompose(in_decompose, nodes, path, out);
        else if (*factorize) code = cmd_factorize(in_factorize, terms, out);
        else if (*witness) code = cmd_witness(in_witness, wargs, seed, out);
        else if (*certify) code = cmd_certify(in_certify, cargs, seed, out);
        else if (*classify) code = cmd_classify(in_classify, pi, cargs, seed, out);
        else if (*shift) code = cmd_shift(in_shift, probes, seed, out);
        else if (*list) code = cmd_catalog_list(out);
        else if (*emit) code = cmd_catalog_emit(name, params, grid, path, out);
        else if (*reproduce) code = cmd_reproduce(key, seed, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        code = kExitUsage;
    } catch (const Error& e) {
        err << "error=" << to_string(e.code()) << '\n' << "message=" << e.what() << '\n';
        code = kExitData;
    }
    out.precision(old_precision);
    return code;
}

}  // namespace windcert::cli
