// Copyright 2026 The kdctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "kdctx/contextuality.hpp"
#include "kdctx/kd.hpp"
#include "kdctx/sim.hpp"
#include "kdctx/states.hpp"
#include "kdctx/tomography.hpp"
#include "kdctx/weakvalues.hpp"

namespace {

using namespace kdctx;

DensityMatrix bench_state() { return *named_state("Nx"); }

void BM_FrameFromAngles(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(frame_from_angles(0.6, 0.9));
}
BENCHMARK(BM_FrameFromAngles);

void BM_IdentityResiduals(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(identity_residuals(canonical_frame()));
}
BENCHMARK(BM_IdentityResiduals);

void BM_ElevenTerms(benchmark::State &state) {
    const auto rho = bench_state();
    for (auto _ : state) benchmark::DoNotOptimize(eleven_terms(rho));
}
BENCHMARK(BM_ElevenTerms);

void BM_KDTable(benchmark::State &state) {
    const auto rho = bench_state();
    for (auto _ : state) benchmark::DoNotOptimize(kd_table(rho));
}
BENCHMARK(BM_KDTable);

void BM_Reconstruct(benchmark::State &state) {
    const auto data = extract(bench_state());
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(data));
}
BENCHMARK(BM_Reconstruct);

void BM_SigmaThreeWays(benchmark::State &state) {
    const auto rho = bench_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(probability_sum(rho));
        benchmark::DoNotOptimize(sigma_from_data(extract(rho)));
        benchmark::DoNotOptimize(sigma_from_kd(eleven_terms(rho)));
    }
}
BENCHMARK(BM_SigmaThreeWays);

void BM_OutcomeValueTable(benchmark::State &state) {
    const auto rho = bench_state();
    for (auto _ : state) benchmark::DoNotOptimize(outcome_value_table(rho, Context::Cf1));
}
BENCHMARK(BM_OutcomeValueTable);

void BM_TomographyExperiment(benchmark::State &state) {
    const auto rho = bench_state();
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    Seed seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(run_tomography_experiment(rho, shots, seed++));
}
BENCHMARK(BM_TomographyExperiment)->Arg(10000)->Arg(1000000);

void BM_InequalityExperiment(benchmark::State &state) {
    const auto rho = bench_state();
    SimOptions opts;
    opts.threads = static_cast<unsigned>(state.range(0));
    Seed seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_inequality_experiment(rho, 1000000, seed++, canonical_frame(), opts));
    }
}
BENCHMARK(BM_InequalityExperiment)->Arg(1)->Arg(4);

} // namespace

BENCHMARK_MAIN();
