// Copyright 2026 The OneGraph Authors
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
#include <string>
#include <vector>

#include "onegraph/graph.hpp"
#include "onegraph/ogtext.hpp"
#include "onegraph/persistence.hpp"
#include "onegraph/text.hpp"

namespace {

using namespace onegraph;

Graph random_graph(std::size_t triples, std::size_t universe, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g;
  while (g.size() < triples) {
    g.assert_text({"e" + std::to_string(rng() % universe), "r" + std::to_string(rng() % 20),
                   "e" + std::to_string(rng() % universe)});
  }
  return g;
}

void BM_Intern(benchmark::State& state) {
  std::vector<std::string> texts;
  for (int i = 0; i < 10000; ++i) texts.push_back("Entity number " + std::to_string(i));
  for (auto _ : state) {
    Dictionary d;
    for (const auto& t : texts) benchmark::DoNotOptimize(d.intern(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(texts.size()));
}
BENCHMARK(BM_Intern);

void BM_Normalize(benchmark::State& state) {
  const std::string text = "  Markus Kro\xCC\x88tzsch and Zhejiang University \xE4\xB8\xAD\xE6\x96\x87  ";
  for (auto _ : state) benchmark::DoNotOptimize(normalize_text(text));
}
BENCHMARK(BM_Normalize);

void BM_ParseDocument(benchmark::State& state) {
  std::string doc;
  for (int i = 0; i < state.range(0); ++i) {
    doc += "Subject " + std::to_string(i) + " \xE2\x96\xA1 relation " + std::to_string(i % 17) +
           " \xE2\x96\xA1 Object " + std::to_string(i * 7) + "\n";
  }
  for (auto _ : state) benchmark::DoNotOptimize(parse_document(doc));
  state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(doc.size()));
}
BENCHMARK(BM_ParseDocument)->Arg(1000)->Arg(10000);

void BM_Assert(benchmark::State& state) {
  for (auto _ : state) {
    Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 5000, 1);
    benchmark::DoNotOptimize(g.size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Assert)->Arg(1000)->Arg(10000);

void BM_Match(benchmark::State& state) {
  Graph g = random_graph(50000, 5000, 2);
  auto all = g.triples();
  std::mt19937_64 rng(3);
  const int mask = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Triple& seed = all[rng() % all.size()];
    Pattern p;
    if (mask & 1) p.head = seed.head;
    if (mask & 2) p.relation = seed.relation;
    if (mask & 4) p.tail = seed.tail;
    std::size_t n = 0;
    g.visit(p, [&](const Triple&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Match)->Arg(1)->Arg(4)->Arg(5)->Arg(7);

void BM_Snapshot(benchmark::State& state) {
  Graph g = random_graph(20000, 5000, 4);
  for (auto _ : state) benchmark::DoNotOptimize(snapshot_string(g));
}
BENCHMARK(BM_Snapshot);

}  // namespace
