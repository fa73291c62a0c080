/*
   Copyright 2026 The shiftalg Authors

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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "shiftalg/commutant.hpp"
#include "shiftalg/duhamel.hpp"
#include "shiftalg/functional.hpp"

namespace {

using namespace shiftalg;

const G0Config& cfg() {
    static const G0Config c(FactoredPoly({{1, 2}, {2, 1}}));
    return c;
}

Functional phi() { return Functional::delta(1, 2) + Functional::delta(GaussianRational(1, 2), 1, 3); }
Functional psi() { return Functional::delta(2, 0) - Functional::delta(0, 3); }

Jet f_jet(unsigned order) {
    std::vector<GaussianRational> c(order + 1);
    for (unsigned k = 0; k <= order; ++k) c[k] = GaussianRational(static_cast<long>(k) + 1, 2 * k + 3);
    return Jet(0, std::move(c));
}

void BM_BphiMatrix_Serial(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(serial::bphi_matrix(cfg(), phi(), n));
}
void BM_BphiMatrix_Parallel(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(bphi_matrix(cfg(), phi(), n));
}

void BM_Moments_Serial(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(serial::convolution_moments(cfg(), phi(), psi(), n));
}
void BM_Moments_Parallel(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    for (auto _ : s) benchmark::DoNotOptimize(convolution_moments(cfg(), phi(), psi(), n));
}

const DuhamelConfig& dcfg() {
    static const DuhamelConfig c(FactoredPoly({{1, 1}, {-1, 1}}), 0);
    return c;
}

void BM_DuhamelMatrix_Serial(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    const Jet f = f_jet(static_cast<unsigned>(n) + dcfg().m());
    for (auto _ : s) benchmark::DoNotOptimize(serial::duhamel_matrix(dcfg(), f, n));
}
void BM_DuhamelMatrix_Parallel(benchmark::State& s) {
    const auto n = static_cast<std::size_t>(s.range(0));
    const Jet f = f_jet(static_cast<unsigned>(n) + dcfg().m());
    for (auto _ : s) benchmark::DoNotOptimize(duhamel_matrix(dcfg(), f, n));
}

}  // namespace

BENCHMARK(BM_BphiMatrix_Serial)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BphiMatrix_Parallel)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Moments_Serial)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Moments_Parallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DuhamelMatrix_Serial)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DuhamelMatrix_Parallel)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
