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

#include <algorithm>
#include <fstream>

#include "onegraph/error.hpp"
#include "onegraph/graph.hpp"
#include "onegraph/ogtext.hpp"
#include "onegraph/query.hpp"
#include "onegraph/semantics.hpp"
#include "support/generators.hpp"

namespace onegraph {
namespace {

Graph load_fixture(const std::string& name) {
  std::ifstream in(std::string(ONEGRAPH_FIXTURE_DIR) + "/" + name);
  ParsedDocument doc = parse_document(in);
  Graph g;
  for (const auto& t : doc.triples) g.assert_text(t);
  return g;
}

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kIo;
}

std::set<std::string> column(const Graph& g, const std::vector<Binding>& rows,
                             const std::string& var) {
  std::set<std::string> out;
  for (const auto& b : rows) out.insert(g.text(b.assignment.at(var)));
  return out;
}

TEST(Query, KeynoteSpeakersComplete) {
  Graph g = load_fixture("iswc_complete.ogt");
  auto rows = evaluate(g, parse_query("?x □ type □ ISWC2022 Keynot Speaker"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(column(g, rows, "x"),
            (std::set<std::string>{"Francesca Rossi", "Ilaria Capua", "Markus Krötzsch"}));
  for (const auto& b : rows) {
    EXPECT_EQ(b.certainty, BindingCertainty::kCertain);
    EXPECT_EQ(b.graph_version, g.version());
  }
}

TEST(Query, KeynoteSpeakersIncomplete) {
  Graph g = load_fixture("iswc_incomplete.ogt");
  auto rows = evaluate(g, parse_query("?x □ type □ ISWC2022 Keynot Speaker"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(g.text(rows[0].assignment.at("x")), "Francesca Rossi");
  EXPECT_EQ(rows[0].certainty, BindingCertainty::kPossiblyIncomplete);
}

TEST(Query, CertaintyFollowsVariableClass) {
  Graph g = load_fixture("iswc_complete.ogt");
  g.assert_text({"Someone", "type", "Open Class"});
  auto rows = evaluate(g, parse_query("?x □ type □ ?c"));
  ASSERT_EQ(rows.size(), 4u);
  for (const auto& b : rows) {
    bool open = g.text(b.assignment.at("c")) == "Open Class";
    EXPECT_EQ(b.certainty, open ? BindingCertainty::kPossiblyIncomplete
                                : BindingCertainty::kCertain);
  }
}

TEST(Query, JoinAndProjection) {
  Graph g = load_fixture("worked_examples.ogt");
  Query q = parse_query(
      "SELECT ?x ?p\n"
      "?x □ born in □ ?y\n"
      "?x □ has won prize □ ?p\n");
  auto rows = evaluate(g, q);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(g.text(rows[0].assignment.at("x")), "Albert Einstein");
  EXPECT_EQ(g.text(rows[0].assignment.at("y")), "1879");
  EXPECT_EQ(effective_projection(q), (std::vector<std::string>{"x", "p"}));
}

TEST(Query, RepeatedVariableUnifies) {
  Graph g;
  g.assert_text({"a", "likes", "a"});
  g.assert_text({"a", "likes", "b"});
  auto rows = evaluate(g, parse_query("?x □ likes □ ?x"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(g.text(rows[0].assignment.at("x")), "a");
}

TEST(Query, UnknownTextYieldsNothing) {
  Graph g = load_fixture("worked_examples.ogt");
  EXPECT_TRUE(evaluate(g, parse_query("?x □ type □ Nonexistent Class")).empty());
}

TEST(Query, UnboundProjection) {
  Graph g;
  Query q = parse_query("SELECT ?z\n?x □ type □ ?y");
  EXPECT_EQ(error_of([&] { evaluate(g, q); }), ErrorCode::kUnboundProjection);
}

TEST(Query, FullRegimeAndExplain) {
  Graph g = load_fixture("worked_examples.ogt");
  g.assert_text({"Alice", "has father", "Bob"});
  Query raw = parse_query("?x □ has parents □ ?y");
  EXPECT_TRUE(evaluate(g, raw).empty());
  Query full = parse_query("REGIME full\n?x □ has parents □ ?y");
  auto rows = evaluate(g, full);
  ASSERT_EQ(rows.size(), 1u);
  ProofTrace trace = explain(g, full, rows[0]);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_EQ(g.texts(trace.steps[0].matched), (TextTriple{"Alice", "has father", "Bob"}));
  ASSERT_EQ(trace.steps[0].subrelation_edges.size(), 1u);
  EXPECT_EQ(g.texts(trace.steps[0].subrelation_edges[0]),
            (TextTriple{"has father", "sub-relation of", "has parents"}));
  for (const Triple& t : trace.steps[0].subrelation_edges) EXPECT_TRUE(g.contains(t));
}

TEST(Query, CanonicalRegimeAndExplain) {
  Graph g = load_fixture("zju_canonical.ogt");
  g.assert_text({"ZJU", "located in", "Hangzhou"});
  Query q = parse_query("REGIME canonical\nZhejiang University □ located in □ ?city");
  auto rows = evaluate(g, q);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(g.text(rows[0].assignment.at("city")), "Hangzhou");
  ProofTrace trace = explain(g, q, rows[0]);
  ASSERT_EQ(trace.steps.size(), 1u);
  EXPECT_FALSE(trace.steps[0].abstract_edges.empty());
  for (const Triple& t : trace.steps[0].abstract_edges) EXPECT_TRUE(g.contains(t));
  EXPECT_TRUE(evaluate(g, parse_query("Zhejiang University □ located in □ ?city")).empty());
}

TEST(Query, StaleBinding) {
  Graph g = load_fixture("iswc_complete.ogt");
  Query q = parse_query("?x □ type □ ISWC2022 Keynot Speaker");
  auto rows = evaluate(g, q);
  ASSERT_FALSE(rows.empty());
  Triple support{rows[0].assignment.at("x"), g.reserved().type,
                 *g.find("ISWC2022 Keynot Speaker")};
  g.retract_triple(support);
  EXPECT_EQ(error_of([&] { explain(g, q, rows[0]); }), ErrorCode::kStaleBinding);
}

TEST(Query, RegimeMonotonicity) {
  Graph g = load_fixture("worked_examples.ogt");
  g.assert_text({"Alice", "has father", "Bob"});
  g.assert_text({"ZJU", "has father", "Nobody"});
  g.assert_text({"Zhejiang University", "abstract to", "Chinese University-ZJU"});
  for (std::string body : {"?x □ ?r □ ?y", "?x □ has parents □ ?y",
                           "Zhejiang University □ ?r □ ?y", "?x □ type □ ?c"}) {
    Reasoner r(g);
    auto raw = evaluate(r, parse_query(body, Regime::kRaw));
    auto canonical = evaluate(r, parse_query(body, Regime::kCanonical));
    auto full = evaluate(r, parse_query(body, Regime::kFull));
    auto contains_all = [](const std::vector<Binding>& big, const std::vector<Binding>& small) {
      for (const auto& b : small) {
        bool found = std::any_of(big.begin(), big.end(), [&](const Binding& x) {
          return x.assignment == b.assignment;
        });
        if (!found) return false;
      }
      return true;
    };
    EXPECT_TRUE(contains_all(canonical, raw)) << body;
    EXPECT_TRUE(contains_all(full, canonical)) << body;
  }
}

// Backtracking join over a flat triple list, in query order, no indexes.
std::set<std::map<std::string, ObjectId>> naive_join(const Graph& g, const Query& q) {
  std::vector<Triple> all = g.triples();
  std::set<std::map<std::string, ObjectId>> out;
  std::map<std::string, ObjectId> env;
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == q.patterns.size()) {
      out.insert(env);
      return;
    }
    const VarPattern& p = q.patterns[i];
    for (const Triple& t : all) {
      auto saved = env;
      bool ok = true;
      auto unify = [&](const Term& term, ObjectId value) {
        if (const auto* s = std::get_if<std::string>(&term)) {
          auto id = g.find(*s);
          return id && *id == value;
        }
        const std::string& name = std::get<Var>(term).name;
        auto [it, fresh] = env.emplace(name, value);
        return fresh || it->second == value;
      };
      ok = unify(p.head, t.head) && unify(p.relation, t.relation) && unify(p.tail, t.tail);
      if (ok) step(i + 1);
      env = saved;
    }
  };
  step(0);
  return out;
}

Query random_query(testing::Rng& rng, const std::vector<std::string>& universe,
                   std::size_t patterns) {
  Query q;
  const char* vars[] = {"a", "b", "c", "d"};
  auto term = [&]() -> Term {
    if (rng() % 3 == 0) return universe[rng() % universe.size()];
    return Var{vars[rng() % 4]};
  };
  for (std::size_t i = 0; i < patterns; ++i) q.patterns.push_back({term(), term(), term()});
  return q;
}

TEST(QueryProperties, MatchesNaiveJoinAndIsOrderInvariant) {
  testing::Rng rng(4242);
  for (int round = 0; round < 40; ++round) {
    Graph g;
    std::vector<std::string> universe;
    for (int i = 0; i < 8; ++i) universe.push_back("t" + std::to_string(i));
    for (int i = 0; i < 60; ++i) {
      g.assert_text({universe[rng() % 8], universe[rng() % 4], universe[rng() % 8]});
    }
    Query q = random_query(rng, universe, 1 + rng() % 3);
    if (query_variables(q).empty()) continue;
    auto rows = evaluate(g, q);
    std::set<std::map<std::string, ObjectId>> got;
    for (const auto& b : rows) got.insert(b.assignment);
    EXPECT_EQ(got.size(), rows.size()) << "duplicate bindings";
    ASSERT_EQ(got, naive_join(g, q));

    Query shuffled = q;
    std::shuffle(shuffled.patterns.begin(), shuffled.patterns.end(), rng);
    std::set<std::map<std::string, ObjectId>> again;
    for (const auto& b : evaluate(g, shuffled)) again.insert(b.assignment);
    EXPECT_EQ(again, got);
  }
}

// ---------------------------------------------------------------------------
// Parser

TEST(QueryParser, Basics) {
  Query q = parse_query("# comment\nREGIME canonical\nSELECT ?x\n?x □ text type □ ?y\n");
  EXPECT_EQ(q.regime, Regime::kCanonical);
  ASSERT_EQ(q.patterns.size(), 1u);
  EXPECT_EQ(std::get<std::string>(q.patterns[0].relation), "text label");
  EXPECT_EQ(q.projection, (std::vector<std::string>{"x"}));
  EXPECT_EQ(query_variables(q), (std::vector<std::string>{"x", "y"}));
}

TEST(QueryParser, DefaultRegimeAndOverride) {
  EXPECT_EQ(parse_query("?x □ type □ ?y", Regime::kFull).regime, Regime::kFull);
  EXPECT_EQ(parse_query("REGIME raw\n?x □ type □ ?y", Regime::kFull).regime, Regime::kRaw);
}

TEST(QueryParser, EscapedTerms) {
  Query q = parse_query("?x □ says □ a\\qb\\nc");
  EXPECT_EQ(std::get<std::string>(q.patterns[0].tail), "a\xE2\x96\xA1" "b\nc");
}

TEST(QueryParser, Errors) {
  auto message = [](std::string_view text) -> std::string {
    try {
      parse_query(text);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kQuerySyntax);
      return e.what();
    }
    ADD_FAILURE() << "parsed: " << text;
    return {};
  };
  EXPECT_NE(message("").find("no patterns"), std::string::npos);
  EXPECT_NE(message("?x □ type").find("line 1"), std::string::npos);
  EXPECT_NE(message("?x □ type □ ?y\nREGIME sideways").find("line 2, column 8"),
            std::string::npos);
  EXPECT_NE(message("?x □ type □ ?y\n?b@d □ r □ t").find("line 2, column 3"),
            std::string::npos);
  EXPECT_NE(message("SELECT x\n?x □ r □ t").find("line 1"), std::string::npos);
  EXPECT_NE(message("?x □ r □ bad\\zescape").find("line 1"), std::string::npos);
}

}  // namespace
}  // namespace onegraph
