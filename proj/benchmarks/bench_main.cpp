// Copyright 2026 The wsym Authors
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

#include <cmath>

#include "wsym/bargmann.hpp"
#include "wsym/order_calculus.hpp"
#include "wsym/quantize.hpp"
#include "wsym/schatten.hpp"
#include "wsym/symbol_class.hpp"

using namespace wsym;

namespace {

GridSymbol gaussian_symbol(int points, double alpha, double shift) {
  return GridSymbol::sample(1, symbol_axes(GridSpec::balanced(points), 1), Domain::PhaseSpace,
                            [=](const Vec& x) {
                              return cd(std::exp(-alpha * ((x[0] - shift) * (x[0] - shift) + x[1] * x[1])));
                            });
}

void BM_MoyalProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSymbol a = gaussian_symbol(n, 0.7, 0.3), b = gaussian_symbol(n, 0.6, -0.2);
  for (auto _ : state) benchmark::DoNotOptimize(moyal_product(a, b));
}
BENCHMARK(BM_MoyalProduct)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_WeylQuantize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSymbol a = gaussian_symbol(n, 1.0, 0.0);
  const GridSpec g = GridSpec::balanced(n);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_quantize(a, g));
}
BENCHMARK(BM_WeylQuantize)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BargmannTransform(benchmark::State& state) {
  const GridSpec g = GridSpec::balanced(static_cast<int>(state.range(0)));
  const GridSymbol u = hermite_function(1, g);
  const BargmannSetup s = BargmannSetup::standard(1);
  for (auto _ : state) benchmark::DoNotOptimize(bargmann_transform(u, s));
}
BENCHMARK(BM_BargmannTransform)->Arg(48)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_StildeNorm(benchmark::State& state) {
  const GridSpec g = GridSpec::balanced(static_cast<int>(state.range(0)));
  const GridSymbol a = GridSymbol::sample(1, {g, g}, Domain::PhaseSpace, [](const Vec& x) {
    return cd(std::exp(-x.squaredNorm()));
  });
  const WindowFamily w = build_partition(Lattice::integer(4, 2.0), 1.0);
  const OrderFunction m = OrderFunction::covector_bracket(1, -4);
  for (auto _ : state) benchmark::DoNotOptimize(stilde_norm(a, m, w));
}
BENCHMARK(BM_StildeNorm)->Arg(32)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_ComposeQuadrature(benchmark::State& state) {
  const OrderFunction m1 = OrderFunction::position_bracket(1, 1.0) * OrderFunction::covector_bracket(1, -4);
  const OrderFunction m2 = OrderFunction::covector_bracket(1, -4);
  Vec z(2), zs(2);
  z << 0.3, -0.2;
  zs << 1.0, 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(compose(m1, m2, z, zs));
}
BENCHMARK(BM_ComposeQuadrature)->Unit(benchmark::kMillisecond);

void BM_CpNorm(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const CMat m = CMat::Random(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(cp_norm(m, 1.0));
}
BENCHMARK(BM_CpNorm)->Arg(64)->Arg(256);

}  // namespace
BENCHMARK_MAIN();
