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

#include <benchmark/benchmark.h>

#include "windcert/catalog.hpp"
#include "windcert/criteria.hpp"
#include "windcert/decompose.hpp"
#include "windcert/extension.hpp"
#include "windcert/winding.hpp"

namespace {

using namespace windcert;

BoundaryFunction counterexample(std::size_t n) {
    return BoundaryFunction::sample(CircleGrid(n), [](Complex z) { return z / (z - 0.5) + 0.2 * std::exp(z); });
}

void BM_Analyze(benchmark::State& state) {
    const auto f = counterexample(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNLogN);

void BM_Winding(benchmark::State& state) {
    const auto f = BoundaryFunction::sample(CircleGrid(static_cast<std::size_t>(state.range(0))),
                                            [](Complex z) { return std::pow(z, 7) * (3.0 + z); });
    for (auto _ : state) benchmark::DoNotOptimize(winding_number(f));
}
BENCHMARK(BM_Winding)->RangeMultiplier(4)->Range(256, 16384);

void BM_MeromorphicTest(benchmark::State& state) {
    const auto f = counterexample(2048);
    for (auto _ : state) benchmark::DoNotOptimize(meromorphic_test(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MeromorphicTest)->Arg(1)->Arg(4);

void BM_RationalRecover(benchmark::State& state) {
    const auto f = BoundaryFunction::sample(CircleGrid(2048), [](Complex z) {
        return (z - 0.3) * (z + 2.0) / ((z - 0.5) * (z + 0.25) * (z - 1.5));
    });
    for (auto _ : state) benchmark::DoNotOptimize(rational_recover(f, 4));
}
BENCHMARK(BM_RationalRecover);

void BM_NewtonDecompose(benchmark::State& state) {
    const auto f = counterexample(2048);
    ZeroFactorSet nodes;
    nodes.add(1.0, static_cast<int>(state.range(0)));
    nodes.add(-1.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(newton_decompose(f, nodes));
}
BENCHMARK(BM_NewtonDecompose)->Arg(1)->Arg(3)->Arg(5);

void BM_Factorize(benchmark::State& state) {
    const auto g = make_case("nonvanishing_winding", {{"n", "-2"}}).f;
    for (auto _ : state) benchmark::DoNotOptimize(factorize_nonvanishing(g, default_delta(g)));
}
BENCHMARK(BM_Factorize);

void BM_WitnessSearchNoHit(benchmark::State& state) {
    const auto f = make_case("paper_7_counterexample").f;
    ProbeFamily fam;
    fam.kind = ProbeKind::FPlusPiP;
    fam.factors.add(0.0, 1);
    const auto threads = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(witness_search(f, fam, 1000, 7, WitnessOptions{threads, 64}));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_WitnessSearchNoHit)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_CertifyPole(benchmark::State& state) {
    const auto f = BoundaryFunction::sample(CircleGrid(2048), [](Complex z) { return (z - 1.0) / (z - 0.5); });
    ZeroFactorSet nodes;
    nodes.add(1.0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(certify_meromorphic_extension(f, nodes, 1));
}
BENCHMARK(BM_CertifyPole)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
