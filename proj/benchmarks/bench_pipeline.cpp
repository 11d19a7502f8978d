// Copyright 2026 The rc4ft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rc4ft/crc.hpp"
#include "rc4ft/evaluator.hpp"
#include "rc4ft/pipeline.hpp"
#include "rc4ft/rc4_core.hpp"

namespace {

const rc4ft::SecretKey& bench_key() {
    static const rc4ft::SecretKey key = rc4ft::SecretKey::from_hex("0102030405");
    return key;
}

void BM_BareCore(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        rc4ft::Rc4State core(bench_key());
        for (int step = 0; step < 256; ++step) core.ksa_step();
        core.begin_prga();
        std::uint8_t sink = 0;
        for (std::uint64_t k = 0; k < n; ++k) sink ^= *core.prga_step().z;
        benchmark::DoNotOptimize(sink);
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BareCore)->Arg(1 << 10)->Arg(1 << 14);

void BM_PipelineCheckersOn(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto result = rc4ft::run(bench_key(), n);
        benchmark::DoNotOptimize(result.keystream.data());
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PipelineCheckersOn)->Arg(1 << 10)->Arg(1 << 14);

void BM_PipelineCheckersOff(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto result = rc4ft::run(bench_key(), n, {}, {.checkers_enabled = false});
        benchmark::DoNotOptimize(result.keystream.data());
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PipelineCheckersOff)->Arg(1 << 10)->Arg(1 << 14);

void BM_PipelineTraced(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        auto result = rc4ft::run(bench_key(), n, {},
                                 {.checkers_enabled = true, .record_trace = true});
        benchmark::DoNotOptimize(result.trace.data());
    }
    state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PipelineTraced)->Arg(1 << 10);

void BM_EvaluateCrc(benchmark::State& state) {
    for (auto _ : state) {
        auto report = rc4ft::evaluate_crc();
        benchmark::DoNotOptimize(report.detected_total);
    }
}
BENCHMARK(BM_EvaluateCrc);

void BM_EvaluateAddition(benchmark::State& state) {
    for (auto _ : state) {
        auto report = rc4ft::evaluate_addition();
        benchmark::DoNotOptimize(report.detected_total);
    }
}
BENCHMARK(BM_EvaluateAddition);

void BM_EvaluateCounter(benchmark::State& state) {
    for (auto _ : state) {
        auto report = rc4ft::evaluate_counter();
        benchmark::DoNotOptimize(report.detected_total);
    }
}
BENCHMARK(BM_EvaluateCounter);

void BM_CrcResidue(benchmark::State& state) {
    std::uint8_t v = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rc4ft::crc4(++v));
    }
}
BENCHMARK(BM_CrcResidue);

}  // namespace

BENCHMARK_MAIN();
