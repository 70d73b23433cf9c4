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

#include "onegraph/query.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "onegraph/error.hpp"

namespace onegraph {

std::string_view to_string(BindingCertainty c) {
  return c == BindingCertainty::kCertain ? "certain" : "possibly-incomplete";
}

std::vector<std::string> query_variables(const Query& q) {
  std::vector<std::string> vars;
  for (const VarPattern& p : q.patterns) {
    for (const Term* t : {&p.head, &p.relation, &p.tail}) {
      if (const Var* v = std::get_if<Var>(t);
          v && std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
        vars.push_back(v->name);
      }
    }
  }
  return vars;
}

std::vector<std::string> effective_projection(const Query& q) {
  std::vector<std::string> vars = query_variables(q);
  if (q.projection.empty()) return vars;
  for (const std::string& name : q.projection) {
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
      throw Error(ErrorCode::kUnboundProjection,
                  "projected variable ?" + name + " does not occur in any pattern");
    }
  }
  return q.projection;
}

namespace {

struct Slot {
  std::optional<std::string> var;
  ObjectId id{};  // valid when !var
};

struct CompiledPattern {
  Slot slots[3];  // head, relation, tail
};

using Assignment = std::map<std::string, ObjectId>;

// Resolves bound texts; nullopt if some text is unknown to the graph, in
// which case the query has no answers.
std::optional<std::vector<CompiledPattern>> compile(const Graph& g, const Query& q) {
  std::vector<CompiledPattern> out;
  for (const VarPattern& p : q.patterns) {
    CompiledPattern cp;
    const Term* terms[3] = {&p.head, &p.relation, &p.tail};
    for (std::size_t i = 0; i < 3; ++i) {
      if (const Var* v = std::get_if<Var>(terms[i])) {
        cp.slots[i].var = v->name;
      } else {
        auto id = g.find(std::get<std::string>(*terms[i]));
        if (!id) return std::nullopt;
        cp.slots[i].id = *id;
      }
    }
    out.push_back(std::move(cp));
  }
  return out;
}

Pattern instantiate(const CompiledPattern& cp, const Assignment& a) {
  std::optional<ObjectId> parts[3];
  for (std::size_t i = 0; i < 3; ++i) {
    const Slot& s = cp.slots[i];
    if (!s.var) {
      parts[i] = s.id;
    } else if (auto it = a.find(*s.var); it != a.end()) {
      parts[i] = it->second;
    }
  }
  return Pattern{parts[0], parts[1], parts[2]};
}

// Extends `a` with the variables of `cp` as matched by `t`. Variables that
// are already bound must match the stored value exactly.
bool unify(const CompiledPattern& cp, const Triple& t, Assignment& a) {
  const ObjectId values[3] = {t.head, t.relation, t.tail};
  for (std::size_t i = 0; i < 3; ++i) {
    const Slot& s = cp.slots[i];
    if (!s.var) continue;
    auto [it, inserted] = a.emplace(*s.var, values[i]);
    if (!inserted && it->second != values[i]) return false;
  }
  return true;
}

// Greedy order: at each step the pattern with the most bound positions
// (constants or variables bound earlier); ties keep query order.
std::vector<std::size_t> join_order(const std::vector<CompiledPattern>& patterns) {
  std::vector<std::size_t> order;
  std::vector<bool> used(patterns.size(), false);
  std::set<std::string> bound;
  for (std::size_t step = 0; step < patterns.size(); ++step) {
    std::size_t best = patterns.size();
    int best_score = -1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (used[i]) continue;
      int score = 0;
      for (const Slot& s : patterns[i].slots) {
        if (!s.var || bound.count(*s.var)) ++score;
      }
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (const Slot& s : patterns[best].slots) {
      if (s.var) bound.insert(*s.var);
    }
  }
  return order;
}

BindingCertainty certainty_of(const Reasoner& reasoner,
                              const std::vector<CompiledPattern>& patterns, const Assignment& a) {
  const ObjectId type = reasoner.graph().reserved().type;
  for (const CompiledPattern& cp : patterns) {
    const Slot& head = cp.slots[0];
    const Slot& rel = cp.slots[1];
    const Slot& tail = cp.slots[2];
    if (!head.var || rel.var || rel.id != type) continue;
    ObjectId cls = tail.var ? a.at(*tail.var) : tail.id;
    if (reasoner.class_label(cls) == ClassLabel::kIncomplete) {
      return BindingCertainty::kPossiblyIncomplete;
    }
  }
  return BindingCertainty::kCertain;
}

}  // namespace

std::vector<Binding> evaluate(const Reasoner& reasoner, const Query& q) {
  const Graph& g = reasoner.graph();
  const std::vector<std::string> projection = effective_projection(q);
  auto compiled = compile(g, q);
  if (!compiled || compiled->empty()) return {};
  const std::vector<std::size_t> order = join_order(*compiled);

  std::set<Assignment> results;
  Assignment current;
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      results.insert(current);
      return;
    }
    const CompiledPattern& cp = (*compiled)[order[depth]];
    for (const Triple& t : reasoner.infer_match(instantiate(cp, current), q.regime)) {
      Assignment saved = current;
      if (unify(cp, t, current)) self(self, depth + 1);
      current = std::move(saved);
    }
  };
  search(search, 0);

  std::vector<std::string> sort_vars = projection;
  for (const std::string& v : query_variables(q)) {
    if (std::find(sort_vars.begin(), sort_vars.end(), v) == sort_vars.end()) {
      sort_vars.push_back(v);
    }
  }
  std::vector<std::pair<std::vector<std::string>, Binding>> keyed;
  keyed.reserve(results.size());
  for (const Assignment& a : results) {
    std::vector<std::string> key;
    for (const std::string& v : sort_vars) key.push_back(g.text(a.at(v)));
    keyed.emplace_back(std::move(key),
                       Binding{a, certainty_of(reasoner, *compiled, a), g.version()});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Binding> out;
  out.reserve(keyed.size());
  for (auto& [key, b] : keyed) out.push_back(std::move(b));
  return out;
}

std::vector<Binding> evaluate(const Graph& g, const Query& q) {
  return evaluate(Reasoner(g), q);
}

ProofTrace explain(const Graph& g, const Query& q, const Binding& b) {
  if (b.graph_version != g.version()) {
    throw Error(ErrorCode::kStaleBinding,
                "graph changed since the binding was produced (version " +
                    std::to_string(b.graph_version) + " -> " + std::to_string(g.version()) +
                    ")");
  }
  auto compiled = compile(g, q);
  if (!compiled) throw Error(ErrorCode::kStaleBinding, "query terms no longer resolve");
  Reasoner reasoner(g);
  const ObjectId abstract_to = g.reserved().abstract_to;

  auto align = [&](ObjectId stored, ObjectId asked, std::vector<Triple>& edges) {
    if (stored == asked) return;
    for (ObjectId x : {stored, asked}) {
      ObjectId c = reasoner.canonical(x);
      if (c != x) edges.push_back(Triple{x, abstract_to, c});
    }
  };

  ProofTrace trace;
  for (std::size_t i = 0; i < compiled->size(); ++i) {
    const CompiledPattern& cp = (*compiled)[i];
    std::optional<Triple> support;
    for (const Triple& t : reasoner.infer_match(instantiate(cp, b.assignment), q.regime)) {
      Assignment probe = b.assignment;
      if (unify(cp, t, probe) && probe == b.assignment) {
        support = t;
        break;
      }
    }
    if (!support) {
      throw Error(ErrorCode::kStaleBinding,
                  "pattern " + std::to_string(i + 1) + " has no supporting triple");
    }
    PatternProof proof;
    proof.pattern_index = i;
    proof.matched = *support;
    if (!cp.slots[0].var) align(support->head, cp.slots[0].id, proof.abstract_edges);
    if (!cp.slots[2].var) align(support->tail, cp.slots[2].id, proof.abstract_edges);
    if (!cp.slots[1].var && support->relation != cp.slots[1].id) {
      auto path = reasoner.subrelation_path(support->relation, cp.slots[1].id);
      if (path) proof.subrelation_edges = std::move(*path);
    }
    trace.steps.push_back(std::move(proof));
  }
  return trace;
}

}  // namespace onegraph
