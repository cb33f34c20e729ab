// Copyright 2026 The qfdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qfdiv/fdiv.hpp"
#include "qfdiv/generators.hpp"
#include "qfdiv/hyptest.hpp"
#include "qfdiv/inequalities.hpp"
#include "qfdiv/qdiv.hpp"

namespace {

using namespace qfdiv;

DensityOperator state(Eigen::Index d, Eigen::Index r, std::uint64_t stream) {
  return random_state({7, d, r, StateKind::FixedRank, stream});
}

void BM_SpectralDecompose(benchmark::State& st) {
  const auto rho = state(st.range(0), st.range(0), 0);
  for (auto _ : st) benchmark::DoNotOptimize(spectral_decompose(rho));
}
BENCHMARK(BM_SpectralDecompose)->RangeMultiplier(2)->Range(2, 64);

void BM_DivergenceNS(benchmark::State& st) {
  const auto rho = state(st.range(0), st.range(0), 0);
  const auto sigma = state(st.range(0), st.range(0), 1);
  const auto f = builtin("kl");
  for (auto _ : st) benchmark::DoNotOptimize(quantum_f_divergence_ns(rho, sigma, f));
}
BENCHMARK(BM_DivergenceNS)->RangeMultiplier(2)->Range(2, 64);

void BM_DivergenceModular(benchmark::State& st) {
  const auto rho = state(st.range(0), st.range(0), 0);
  const auto sigma = state(st.range(0), st.range(0), 1);
  const auto f = builtin("kl");
  for (auto _ : st) benchmark::DoNotOptimize(quantum_f_divergence_modular(rho, sigma, f));
}
BENCHMARK(BM_DivergenceModular)->RangeMultiplier(2)->Range(2, 64);

void BM_InequalityItems(benchmark::State& st) {
  const auto rho = state(st.range(0), 1 + st.range(0) / 2, 0);
  const auto sigma = state(st.range(0), st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(check_all_items(rho, sigma));
}
BENCHMARK(BM_InequalityItems)->DenseRange(2, 6, 2);

void BM_Chernoff(benchmark::State& st) {
  const auto rho = state(st.range(0), st.range(0), 0);
  const auto sigma = state(st.range(0), st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(chernoff(rho, sigma));
}
BENCHMARK(BM_Chernoff)->RangeMultiplier(2)->Range(2, 16);

void BM_Helstrom(benchmark::State& st) {
  const auto inst = make_instance(state(2, 2, 0), state(2, 2, 1));
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(helstrom_error(inst, n));
}
BENCHMARK(BM_Helstrom)->DenseRange(1, 8, 1);

}  // namespace
BENCHMARK_MAIN();
