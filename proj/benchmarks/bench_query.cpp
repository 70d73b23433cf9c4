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

#include "onegraph/graph.hpp"
#include "onegraph/query.hpp"
#include "onegraph/semantics.hpp"

namespace {

using namespace onegraph;

// People with typed classes, a sub-relation layer and some abstract aliases.
Graph social_graph(std::size_t people) {
  std::mt19937_64 rng(11);
  Graph g;
  g.assert_text({"has father", "sub-relation of", "has parents"});
  g.assert_text({"has mother", "sub-relation of", "has parents"});
  for (std::size_t i = 0; i < people; ++i) {
    std::string p = "person " + std::to_string(i);
    g.assert_text({p, "type", "Class " + std::to_string(i % 50)});
    g.assert_text({p, "has father", "person " + std::to_string(rng() % people)});
    g.assert_text({p, "has mother", "person " + std::to_string(rng() % people)});
    g.assert_text({p, "lives in", "city " + std::to_string(rng() % 100)});
    if (i % 10 == 0) {
      g.assert_text({"alias " + std::to_string(i), "abstract to", "Abs " + std::to_string(i)});
      g.assert_text({p, "abstract to", "Abs " + std::to_string(i)});
      g.assert_text({"Abs " + std::to_string(i), "text label", "Abstract"});
    }
  }
  return g;
}

void BM_ReasonerBuild(benchmark::State& state) {
  Graph g = social_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Reasoner r(g);
    benchmark::DoNotOptimize(&r);
  }
}
BENCHMARK(BM_ReasonerBuild)->Arg(1000)->Arg(10000);

void BM_EvaluateJoin(benchmark::State& state) {
  Graph g = social_graph(5000);
  Reasoner r(g);
  Query q = parse_query(
      "?x □ type □ Class 7\n"
      "?x □ has parents □ ?p\n"
      "?p □ lives in □ ?city\n",
      static_cast<Regime>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(r, q));
}
BENCHMARK(BM_EvaluateJoin)->Arg(0)->Arg(1)->Arg(2);

void BM_CountMembers(benchmark::State& state) {
  Graph g = social_graph(10000);
  g.assert_text({"Class 3", "class label", "Complete"});
  Reasoner r(g);
  ObjectId c = *g.find("Class 3");
  for (auto _ : state) benchmark::DoNotOptimize(r.count_members(c));
}
BENCHMARK(BM_CountMembers);

}  // namespace
