// Copyright 2026 The twophoton Authors
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

#include <numbers>
#include <random>
#include <vector>

#include "twophoton/cascade.hpp"
#include "twophoton/circuit.hpp"
#include "twophoton/hom.hpp"
#include "twophoton/quadrature.hpp"

using namespace twophoton;

static void GaussHermiteRuleBuild(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    GaussHermiteRule rule(n);
    benchmark::DoNotOptimize(rule.weights().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(GaussHermiteRuleBuild)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void DipPoint(benchmark::State& state) {
  const hom::SpectralProfile profile(1.0);
  const double tau = static_cast<double>(state.range(0)) / 10.0;
  hom::dip_point(tau, profile);  // warm the rule cache
  for (auto _ : state) benchmark::DoNotOptimize(hom::dip_point(tau, profile));
}
BENCHMARK(DipPoint)->Arg(1)->Arg(10)->Arg(30);

static void DipCurveFigure(benchmark::State& state) {
  std::vector<double> taus(200);
  for (std::size_t k = 0; k < taus.size(); ++k) taus[k] = 3.0 * static_cast<double>(k) / 199.0;
  const std::vector<hom::SpectralProfile> profiles{{1.0, 1.0}, {1.0, 0.75}, {1.0, 0.5}, {1.0, 0.25}};
  for (auto _ : state) {
    auto curve = hom::dip_curve(taus, profiles, hom::kDefaultQuadratureNodes,
                                static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(curve.series.data());
  }
}
BENCHMARK(DipCurveFigure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void SimulateCascade(benchmark::State& state) {
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto tally = cascade::simulate_cascade(cascade::RoutingHypothesis::IndependentRouting, trials, 1, 1);
    benchmark::DoNotOptimize(tally.trials);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(SimulateCascade)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void CompileCircuit(benchmark::State& state) {
  std::string source = "modes 8\n";
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> mode(0, 7);
  for (int k = 0; k < state.range(0); ++k) {
    const int i = mode(rng);
    const int j = (i + 1 + mode(rng) % 7) % 8;
    source += "bs " + std::to_string(i) + " " + std::to_string(j) + "\nphase " +
              std::to_string(j) + " phi\n";
  }
  const auto ast = circuit::parse(source);
  const circuit::Bindings bindings{{"phi", std::numbers::pi / 3}};
  for (auto _ : state) {
    auto t = circuit::compile(ast, bindings);
    benchmark::DoNotOptimize(t.matrix().data());
  }
}
BENCHMARK(CompileCircuit)->Arg(10)->Arg(100);

static void ParseCircuit(benchmark::State& state) {
  std::string source = "# generated\nmodes 4\n";
  for (int k = 0; k < 1000; ++k) source += "bs 0 1\nphase 2 -0.25*pi\nphase 3 theta\n";
  for (auto _ : state) {
    auto ast = circuit::parse(source);
    benchmark::DoNotOptimize(ast.elements.data());
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(source.size()));
}
BENCHMARK(ParseCircuit);

BENCHMARK_MAIN();
