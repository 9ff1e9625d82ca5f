// Copyright 2026 The alggraph Authors. All Rights Reserved.
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

#include "alggraph/corpus.hpp"
#include "alggraph/edges.hpp"
#include "alggraph/random.hpp"
#include "alggraph/realization.hpp"
#include "alggraph/relations.hpp"
#include "alggraph/subpower.hpp"
#include "alggraph/term_context.hpp"
#include "alggraph/thin.hpp"

namespace {

  using namespace alggraph;

  FiniteAlgebra corpus(char const* name) { return *corpus_algebra(name); }

  // Closure of three random generators in rps3^k.
  void BM_SubpowerClosure(benchmark::State& state) {
    auto         a = corpus("rps3");
    auto         k = static_cast<std::size_t>(state.range(0));
    RandomSource rng(1);
    std::vector<std::vector<Elem>> gens(3, std::vector<Elem>(k));
    for (auto& g : gens) {
      for (auto& x : g) x = static_cast<Elem>(rng.below(3));
    }
    std::size_t tuples = 0;
    for (auto _ : state) {
      auto r = subpower_generate(std::vector<FiniteAlgebra>(k, a), gens);
      tuples = r.size();
      benchmark::DoNotOptimize(tuples);
    }
    state.counters["tuples"] = static_cast<double>(tuples);
  }
  BENCHMARK(BM_SubpowerClosure)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

  void BM_EdgeGraph(benchmark::State& state) {
    RandomSource rng(2);
    auto a = random_algebra(rng, static_cast<std::size_t>(state.range(0)), {2}, "r");
    for (auto _ : state) {
      benchmark::DoNotOptimize(edge_graph(a));
    }
  }
  BENCHMARK(BM_EdgeGraph)->DenseRange(3, 6)->Unit(benchmark::kMicrosecond);

  void BM_ClassContext(benchmark::State& state) {
    auto a = corpus(state.range(0) == 0 ? "c3" : "rps3");
    for (auto _ : state) {
      ClassContext k({a});
      benchmark::DoNotOptimize(k.members().size());
    }
  }
  BENCHMARK(BM_ClassContext)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

  void BM_ThinEdges(benchmark::State& state) {
    auto         a    = corpus("m2t");
    ClassContext k({a});
    auto         mode = state.range(0) == 0 ? Mode::exact : Mode::witness;
    for (auto _ : state) {
      benchmark::DoNotOptimize(thin_edges(Realization::of_base(a, 0), k, mode).size);
    }
  }
  BENCHMARK(BM_ThinEdges)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

  void BM_RectCheck(benchmark::State& state) {
    auto         a = corpus("rps3");
    ClassContext k({a});
    auto r = subpower_generate({a, a}, {{0, 1}, {1, 2}, {2, 2}});
    for (auto _ : state) {
      benchmark::DoNotOptimize(rect_check(k, r, Mode::exact));
    }
  }
  BENCHMARK(BM_RectCheck)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
