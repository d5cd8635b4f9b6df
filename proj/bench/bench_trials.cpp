// Copyright 2026 The ipea-bench Authors
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

// Serial reference vs OpenMP trial loops on the noisy circuit-mode IPEA.

#include <benchmark/benchmark.h>

#include "ipea/experiments.hpp"
#include "ipea/pea.hpp"
#include "ipea/trials.hpp"

namespace {

using namespace ipea;

constexpr std::uint64_t kTrials = 4000;

std::uint64_t noisy_successes(int m, const trials::ExecPolicy& exec) {
    const auto config = pea::IpeaConfig::circuit(1.234, m, noise::NoiseParams{0.02, 0.05});
    const double phi = config.target_phase();
    return trials::count(
        kTrials,
        [&](std::uint64_t trial) {
            RngStream rng(1, bench::stream_key(bench::ExperimentId::noise_sweep, 0), trial);
            return phase::accepted(pea::run_ipea(config, rng).result, phi);
        },
        exec);
}

void BM_IpeaSerial(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(noisy_successes(m, {trials::Exec::serial, 1}));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTrials));
}

void BM_IpeaOpenMP(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(noisy_successes(m, {trials::Exec::openmp, threads}));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTrials));
}

void BM_NoiseSweep(benchmark::State& state) {
    bench::NoiseSweepConfig config;
    config.trials = 200;
    config.exec = state.range(0) == 0 ? trials::ExecPolicy{trials::Exec::serial, 1}
                                      : trials::ExecPolicy{trials::Exec::openmp, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(bench::exp_noise_sweep(config).rows.size());
}

}  // namespace

BENCHMARK(BM_IpeaSerial)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IpeaOpenMP)->Args({5, 0})->Args({10, 0})->Args({10, 8})->UseRealTime()->Unit(benchmark::kMillisecond);
// Arg 0 selects the serial reference; otherwise the OpenMP thread count.
BENCHMARK(BM_NoiseSweep)->Arg(0)->Arg(1)->Arg(8)->UseRealTime()->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
