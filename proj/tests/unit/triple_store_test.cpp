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

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "onegraph/error.hpp"
#include "onegraph/graph.hpp"
#include "onegraph/persistence.hpp"
#include "onegraph/versioned_graph.hpp"
#include "support/generators.hpp"

namespace onegraph {
namespace {

TextTriple tt(std::string h, std::string r, std::string t) {
  return TextTriple{std::move(h), std::move(r), std::move(t)};
}

TEST(Graph, AssertIsIdempotent) {
  Graph g;
  auto t = tt("Albert Einstein", "has won prize", "Nobel Prize");
  EXPECT_EQ(g.assert_text(t), AssertResult::kInserted);
  EXPECT_EQ(g.assert_text(t), AssertResult::kAlreadyPresent);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.log().size(), 1u);
}

TEST(Graph, OpenAiEventBlockAddsSix) {
  Graph g;
  g.assert_text(tt("OpenAI", "announced", "ChatGPT"));
  std::size_t before = g.size();
  const std::string e = "OpenAI announced ChatGPT";
  for (auto t : {tt(e, "subject", "OpenAI"), tt(e, "relation", "announced"),
                 tt(e, "object", "ChatGPT"), tt(e, "date", "2022.11.30"),
                 tt(e, "introducing blog", "https://openai.com/blog/chatgpt"),
                 tt(e, "text label", "Description")}) {
    g.assert_text(t);
  }
  EXPECT_EQ(g.size() - before, 6u);
}

TEST(Graph, AssertRejectsForeignIds) {
  Graph g;
  try {
    g.assert_triple(Triple{ObjectId{500}, g.reserved().type, g.reserved().type});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownId);
  }
  EXPECT_TRUE(g.empty());
}

TEST(Graph, Retract) {
  Graph g;
  Triple t = g.intern_triple(tt("a", "r", "b"));
  g.assert_triple(t);
  EXPECT_EQ(g.retract_triple(t), RetractResult::kRemoved);
  EXPECT_EQ(g.retract_triple(t), RetractResult::kNotPresent);
  EXPECT_TRUE(g.match(Pattern{t.head, std::nullopt, std::nullopt}).empty());
  EXPECT_EQ(g.log().size(), 2u);
  EXPECT_EQ(g.log()[1].op, LogOp::kRetract);
}

TEST(Graph, RandomInsertsMatchSetOracle) {
  testing::Rng rng(1);
  std::bernoulli_distribution dup(0.3);
  Graph g;
  std::set<TextTriple> oracle;
  std::vector<TextTriple> inserted;
  for (int i = 0; i < 1000; ++i) {
    TextTriple t = (dup(rng) && !inserted.empty())
                       ? inserted[rng() % inserted.size()]
                       : tt(testing::small_text(rng, 1000), testing::small_text(rng, 5),
                            testing::small_text(rng, 1000));
    inserted.push_back(t);
    oracle.insert(t);
    g.assert_text(t);
  }
  EXPECT_EQ(g.size(), oracle.size());
  EXPECT_EQ(testing::text_set(g), oracle);
}

TEST(Graph, MatchOnCompleteBlock) {
  Graph g;
  for (const char* who : {"Francesca Rossi", "Ilaria Capua", "Markus Krötzsch"}) {
    g.assert_text(tt(who, "type", "ISWC2022 Keynot Speaker"));
  }
  g.assert_text(tt("ISWC2022 Keynot Speaker", "class label", "Complete"));
  auto cls = g.find("ISWC2022 Keynot Speaker");
  EXPECT_EQ(g.match(Pattern{std::nullopt, g.reserved().type, cls}).size(), 3u);
  // Fully bound but absent.
  EXPECT_TRUE(g.match(Pattern{cls, g.reserved().type, cls}).empty());
}

TEST(Graph, AllIndexesAgreeWithScan) {
  testing::Rng rng(99);
  for (int round = 0; round < 20; ++round) {
    Graph g;
    for (int i = 0; i < 300; ++i) {
      g.assert_text(tt(testing::small_text(rng, 30), testing::small_text(rng, 6),
                       testing::small_text(rng, 30)));
    }
    std::vector<Triple> all = g.triples();
    for (int q = 0; q < 50; ++q) {
      const Triple& sample = all[rng() % all.size()];
      for (int mask = 0; mask < 8; ++mask) {
        Pattern p;
        if (mask & 1) p.head = sample.head;
        if (mask & 2) p.relation = sample.relation;
        if (mask & 4) p.tail = sample.tail;
        auto expected = testing::scan_match(all, p);
        auto best = g.match(p);
        EXPECT_EQ(std::set<Triple>(best.begin(), best.end()), expected);
        EXPECT_EQ(best.size(), expected.size()) << "duplicates in answer";
        for (IndexOrder o : {IndexOrder::kHRT, IndexOrder::kRTH, IndexOrder::kTHR}) {
          auto via = g.match_with(o, p);
          EXPECT_EQ(std::set<Triple>(via.begin(), via.end()), expected);
        }
      }
    }
    EXPECT_EQ(g.match(Pattern{}).size(), g.size());
  }
}

TEST(Graph, LogReplayReproducesState) {
  testing::Rng rng(17);
  std::bernoulli_distribution retract(0.4);
  Graph g;
  std::vector<Triple> live;
  for (int i = 0; i < 2000; ++i) {
    if (retract(rng) && !live.empty()) {
      g.retract_triple(live[rng() % live.size()]);
    } else {
      Triple t = g.intern_triple(tt(testing::small_text(rng, 40), testing::small_text(rng, 4),
                                    testing::small_text(rng, 40)));
      g.assert_triple(t);
      live.push_back(t);
    }
  }
  Graph replayed = Graph::replay(g.log());
  EXPECT_EQ(testing::text_set(replayed), testing::text_set(g));
  EXPECT_EQ(snapshot_string(replayed), snapshot_string(g));
  for (std::size_t i = 1; i < g.log().size(); ++i) {
    EXPECT_LT(g.log()[i - 1].seq, g.log()[i].seq);
  }
}

TEST(Graph, ReplayKeepsAliasSpellingsVerbatim) {
  Graph g;
  g.assert_text(tt("x", "text type", "description"));
  Graph replayed = Graph::replay(g.log());
  EXPECT_EQ(testing::text_set(replayed), testing::text_set(g));
}

TEST(Graph, VersionBumpsOnlyOnChange) {
  Graph g;
  Triple t = g.intern_triple(tt("a", "r", "b"));
  EXPECT_EQ(g.version(), 0u);
  g.assert_triple(t);
  g.assert_triple(t);
  EXPECT_EQ(g.version(), 1u);
  g.retract_triple(t);
  g.retract_triple(t);
  EXPECT_EQ(g.version(), 2u);
}

// ---------------------------------------------------------------------------
// Snapshot and log

Graph sample_graph() {
  Graph g;
  g.assert_text(tt("Albert Einstein", "born in", "1879"));
  g.assert_text(tt("1879", "format label", "Time"));
  g.assert_text(tt("doc", "says", "line one\nline two □ still"));
  g.assert_text(tt("#tag", "r", "back\\slash"));
  return g;
}

TEST(Snapshot, SaveLoadPreservesTexts) {
  Graph g = sample_graph();
  LoadResult r = load(snapshot_string(g), "");
  EXPECT_EQ(testing::text_set(r.graph), testing::text_set(g));
  EXPECT_EQ(r.snapshot_triples, 4u);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(snapshot_string(r.graph), snapshot_string(g));
}

TEST(Snapshot, HeaderFormat) {
  std::string s = snapshot_string(Graph{});
  EXPECT_EQ(s, "#ogsnapshot v1 0 00000000\n");
  EXPECT_TRUE(load(s, "").graph.empty());
  EXPECT_TRUE(load("", "").graph.empty());
}

TEST(Snapshot, ChecksumMismatchIsCorrupt) {
  std::string s = snapshot_string(sample_graph());
  s[s.size() - 2] ^= 1;
  try {
    load(s, "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptSnapshot);
  }
}

TEST(Snapshot, CountMismatchIsCorrupt) {
  std::string s = snapshot_string(sample_graph());
  s.replace(s.find(" 4 "), 3, " 5 ");
  EXPECT_THROW(load(s, ""), Error);
}

TEST(Log, TruncatedTailIsDroppedWithWarning) {
  Graph g;
  g.assert_text(tt("a", "r", "b"));
  g.assert_text(tt("c", "r", "d"));
  std::ostringstream log;
  write_log(log, g.log());
  std::string text = log.str() + "+ e □ r □ ";  // half-written entry
  LoadResult r = load(snapshot_string(Graph{}), text);
  EXPECT_EQ(testing::text_set(r.graph), testing::text_set(g));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, DiagnosticCode::kTruncatedLog);
  EXPECT_EQ(r.log_entries, 2u);
}

TEST(Log, MalformedLineIsCorrupt) {
  try {
    load(snapshot_string(Graph{}), "* a □ b □ c\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptLog);
  }
}

TEST(Log, SnapshotPlusLogReplaysToSameGraph) {
  Graph base = sample_graph();
  LoadResult first = load(snapshot_string(base), "");
  Graph& g = first.graph;
  std::size_t mark = g.log().size();
  g.assert_text(tt("new", "fact", "here"));
  g.retract_triple(g.intern_triple(tt("1879", "format label", "Time")));
  std::ostringstream log;
  write_log(log, std::span<const LogEntry>(g.log()).subspan(mark));
  LoadResult second = load(snapshot_string(base), log.str());
  EXPECT_EQ(testing::text_set(second.graph), testing::text_set(g));
  EXPECT_EQ(testing::text_set(Graph::replay(second.graph.log())), testing::text_set(g));
}

// ---------------------------------------------------------------------------
// Snapshot isolation

TEST(VersionedGraph, ReadersNeverSeePartialWrites) {
  VersionedGraph vg;
  std::atomic<bool> done{false};
  std::atomic<int> violations{0};
  std::vector<std::thread> readers;
  for (int i = 0; i < 4; ++i) {
    readers.emplace_back([&] {
      while (!done.load()) {
        auto snap = vg.snapshot();
        // Every write adds a pair of triples atomically.
        if (snap->size() % 2 != 0) ++violations;
        std::size_t via_index = snap->match_with(IndexOrder::kTHR, Pattern{}).size();
        if (via_index != snap->size()) ++violations;
      }
    });
  }
  for (int i = 0; i < 300; ++i) {
    vg.write([&](Graph& g) {
      g.assert_text(tt("a" + std::to_string(i), "r", "x"));
      g.assert_text(tt("b" + std::to_string(i), "r", "x"));
    });
  }
  done = true;
  for (auto& t : readers) t.join();
  EXPECT_EQ(violations.load(), 0);
  EXPECT_EQ(vg.snapshot()->size(), 600u);
}

TEST(VersionedGraph, FailedWritePublishesNothing) {
  VersionedGraph vg;
  vg.write([](Graph& g) { g.assert_text(tt("a", "r", "b")); });
  EXPECT_THROW(vg.write([](Graph& g) {
                 g.assert_text(tt("c", "r", "d"));
                 throw std::runtime_error("abort");
               }),
               std::runtime_error);
  EXPECT_EQ(vg.snapshot()->size(), 1u);
}

TEST(VersionedGraph, OldSnapshotsStayValid) {
  VersionedGraph vg;
  auto before = vg.snapshot();
  std::size_t n = vg.write([](Graph& g) {
    g.assert_text(tt("a", "r", "b"));
    return g.size();
  });
  EXPECT_EQ(n, 1u);
  EXPECT_TRUE(before->empty());
  EXPECT_EQ(vg.snapshot()->size(), 1u);
}

}  // namespace
}  // namespace onegraph
