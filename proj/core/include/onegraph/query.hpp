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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "onegraph/graph.hpp"
#include "onegraph/semantics.hpp"

namespace onegraph {

struct Var {
  std::string name;

  friend bool operator==(const Var&, const Var&) = default;
};

// A bound term is a normalized text; a Var is matched against anything.
using Term = std::variant<std::string, Var>;

struct VarPattern {
  Term head;
  Term relation;
  Term tail;
};

struct Query {
  std::vector<VarPattern> patterns;
  Regime regime = Regime::kRaw;
  // Empty means every variable in order of first appearance.
  std::vector<std::string> projection;
};

enum class BindingCertainty { kCertain, kPossiblyIncomplete };

std::string_view to_string(BindingCertainty c);

struct Binding {
  std::map<std::string, ObjectId> assignment;  // total over the query's variables
  BindingCertainty certainty = BindingCertainty::kCertain;
  std::uint64_t graph_version = 0;

  friend bool operator==(const Binding&, const Binding&) = default;
};

// Variables in order of first appearance.
std::vector<std::string> query_variables(const Query& q);

// Projection actually used: q.projection, or query_variables(q) if empty.
// Throws Error(kUnboundProjection) if a projected name is not a variable of q.
std::vector<std::string> effective_projection(const Query& q);

// Natural join of the patterns' infer_match answers under q.regime.
// A binding is PossiblyIncomplete iff one of its (?var, type, C) patterns
// names a class C whose class label is Incomplete. Bindings are sorted by
// the texts of the projected variables, then of the remaining ones.
std::vector<Binding> evaluate(const Graph& g, const Query& q);
std::vector<Binding> evaluate(const Reasoner& reasoner, const Query& q);

struct PatternProof {
  std::size_t pattern_index = 0;
  Triple matched;                      // stored triple satisfying the pattern
  std::vector<Triple> abstract_edges;  // `abstract to` edges used to align terms
  std::vector<Triple> subrelation_edges;  // chain from matched relation to the pattern's
};

struct ProofTrace {
  std::vector<PatternProof> steps;  // one per pattern, in query order
};

// Throws Error(kStaleBinding) if g changed since the binding was produced.
ProofTrace explain(const Graph& g, const Query& q, const Binding& b);

// Text syntax:
//
//   # comment
//   REGIME raw|canonical|full
//   SELECT ?a ?b
//   ?a □ type □ University
//
// Pattern fields follow the .ogt field rules; a field of the form ?name
// (letters, digits, '_' or '-') is a variable. Header lines may appear
// anywhere. Throws Error(kQuerySyntax) with "line L, column C" context.
// `default_regime` applies when no REGIME line is present.
Query parse_query(std::string_view text, Regime default_regime = Regime::kRaw);

}  // namespace onegraph
