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

#include <cstddef>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onegraph/graph.hpp"
#include "onegraph/labels.hpp"

namespace onegraph {

// Raw: stored triples only. Canonical: heads and tails compared after
// canonicalization. Full: Canonical plus sub-relation expansion.
enum class Regime { kRaw, kCanonical, kFull };

std::string_view to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view text);

enum class CanonicalMode {
  kStrict,   // throw on a malformed abstract edge
  kLenient,  // fall back to the object itself
};

enum class Certainty { kExact, kLowerBound };

struct MembershipAnswer {
  std::set<ObjectId> members;  // canonicalized
  Certainty certainty = Certainty::kLowerBound;
};

enum class CountKind { kExact, kAtLeast };

struct MemberCount {
  std::size_t count = 0;
  CountKind kind = CountKind::kAtLeast;

  friend bool operator==(const MemberCount&, const MemberCount&) = default;
};

struct EventReification {
  ObjectId event;
  Triple base;
  std::vector<Triple> extras;  // other statements about the event
};

// Read-only semantic view over one graph state. Builds the abstract,
// type and sub-relation adjacency once; all queries are then const and safe
// to run concurrently. The view must not outlive the graph, and is stale
// once the graph is mutated.
class Reasoner {
 public:
  explicit Reasoner(const Graph& g);

  const Graph& graph() const { return g_; }

  // One-hop canonicalization: the target of x's single `abstract to` edge
  // when that target is labeled Abstract and has no abstract edge itself.
  ObjectId canonical(ObjectId x) const;
  ObjectId canonicalize(ObjectId x, CanonicalMode mode) const;

  // Every y with canonical(y) == canonical(x), sorted; includes x.
  std::vector<ObjectId> equivalents(ObjectId x) const;

  // Classes reachable from canonical(x) over >= 1 `type` edges, with edges
  // taken between canonicalized endpoints.
  std::set<ObjectId> type_closure(ObjectId x) const;

  // Reflexive-transitive closure of r over `sub-relation of`.
  std::set<ObjectId> subrelation_closure(ObjectId r) const;

  // Relations r' with r in subrelation_closure(r'); includes r.
  std::set<ObjectId> subrelations_of(ObjectId r) const;

  // Shortest chain of `sub-relation of` triples from `from` up to `to`;
  // empty when from == to, nullopt when unreachable.
  std::optional<std::vector<Triple>> subrelation_path(ObjectId from, ObjectId to) const;

  // Stored triples answering `p` under `regime`, deduplicated and ordered
  // by (head, relation, tail) id.
  std::vector<Triple> infer_match(const Pattern& p, Regime regime) const;

  MembershipAnswer class_membership(ObjectId c) const;

  // Instances and subclasses reachable downward from c over the canonical
  // type graph. Exact only if c and every class met on the way down is
  // Complete.
  MembershipAnswer transitive_membership(ObjectId c) const;

  MemberCount count_members(ObjectId c) const;

  bool is_abstract(ObjectId x) const;
  ClassLabel class_label(ObjectId c) const;

  // Outgoing `abstract to` targets per object, for validation.
  const std::unordered_map<ObjectId, std::vector<ObjectId>>& abstract_edges() const {
    return abstract_out_;
  }

  // Canonical type graph: canonical node -> canonical parents.
  const std::unordered_map<ObjectId, std::set<ObjectId>>& type_parents() const {
    return type_up_;
  }
  const std::unordered_map<ObjectId, std::set<ObjectId>>& super_relations() const {
    return rel_up_;
  }

 private:
  const Graph& g_;
  std::unordered_map<ObjectId, std::vector<ObjectId>> abstract_out_;
  std::unordered_map<ObjectId, ObjectId> canonical_;           // only x != canonical(x)
  std::unordered_map<ObjectId, std::vector<ObjectId>> aliases_;  // canonical -> others
  std::unordered_map<ObjectId, std::set<ObjectId>> type_up_;
  std::unordered_map<ObjectId, std::set<ObjectId>> type_down_;
  std::unordered_map<ObjectId, std::set<ObjectId>> rel_up_;
  std::unordered_map<ObjectId, std::set<ObjectId>> rel_down_;
};

// Convenience wrappers that build a Reasoner for a single call.
ObjectId canonicalize(const Graph& g, ObjectId x,
                      CanonicalMode mode = CanonicalMode::kLenient);
std::set<ObjectId> type_closure(const Graph& g, ObjectId x);
std::set<ObjectId> subrelation_closure(const Graph& g, ObjectId r);
std::vector<Triple> infer_match(const Graph& g, const Pattern& p, Regime regime);
MembershipAnswer class_membership(const Graph& g, ObjectId c);
MemberCount count_members(const Graph& g, ObjectId c);

// Asserts (E, subject, h), (E, relation, r), (E, object, t) and
// (E, text label, Description). E defaults to "<h> <r> <t>". Idempotent for
// an event that already reifies `base`.
//
// Errors: kBaseNotAsserted if base is not in g; kEventNameCollision if E
// already has positional edges describing another triple.
EventReification reify(Graph& g, const Triple& base,
                       std::optional<std::string_view> event_name = std::nullopt);

// The reification carried by `event`, if it has exactly one subject,
// relation and object edge.
std::optional<EventReification> reification_of(const Graph& g, ObjectId event);

// Objects with at least one subject/relation/object out-edge, sorted.
std::vector<ObjectId> event_objects(const Graph& g);

}  // namespace onegraph
