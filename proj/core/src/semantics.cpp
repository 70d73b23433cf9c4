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

#include "onegraph/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "onegraph/error.hpp"

namespace onegraph {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kRaw: return "raw";
    case Regime::kCanonical: return "canonical";
    case Regime::kFull: return "full";
  }
  return "";
}

std::optional<Regime> parse_regime(std::string_view text) {
  if (text == "raw") return Regime::kRaw;
  if (text == "canonical") return Regime::kCanonical;
  if (text == "full") return Regime::kFull;
  return std::nullopt;
}

namespace {

using Adjacency = std::unordered_map<ObjectId, std::set<ObjectId>>;

const std::set<ObjectId>& neighbors(const Adjacency& adj, ObjectId x) {
  static const std::set<ObjectId> kNone;
  auto it = adj.find(x);
  return it == adj.end() ? kNone : it->second;
}

// Nodes reachable from `start` over >= 1 edges.
std::set<ObjectId> reachable(const Adjacency& adj, ObjectId start) {
  std::set<ObjectId> seen;
  std::deque<ObjectId> queue;
  for (ObjectId n : neighbors(adj, start)) {
    if (seen.insert(n).second) queue.push_back(n);
  }
  while (!queue.empty()) {
    ObjectId x = queue.front();
    queue.pop_front();
    for (ObjectId n : neighbors(adj, x)) {
      if (seen.insert(n).second) queue.push_back(n);
    }
  }
  return seen;
}

}  // namespace

Reasoner::Reasoner(const Graph& g) : g_(g) {
  const ReservedIds& r = g.reserved();
  g.visit(Pattern{std::nullopt, r.abstract_to, std::nullopt},
          [&](const Triple& t) { abstract_out_[t.head].push_back(t.tail); });
  for (const auto& [x, targets] : abstract_out_) {
    if (targets.size() != 1) continue;
    ObjectId target = targets.front();
    if (target == x || !is_abstract(target) || abstract_out_.count(target) > 0) continue;
    canonical_.emplace(x, target);
    aliases_[target].push_back(x);
  }
  for (auto& [c, list] : aliases_) std::sort(list.begin(), list.end());

  g.visit(Pattern{std::nullopt, r.type, std::nullopt}, [&](const Triple& t) {
    ObjectId child = canonical(t.head);
    ObjectId parent = canonical(t.tail);
    type_up_[child].insert(parent);
    type_down_[parent].insert(child);
  });
  g.visit(Pattern{std::nullopt, r.sub_relation_of, std::nullopt}, [&](const Triple& t) {
    rel_up_[t.head].insert(t.tail);
    rel_down_[t.tail].insert(t.head);
  });
}

bool Reasoner::is_abstract(ObjectId x) const {
  return derive_labels(g_, x).labels.text_label == TextLabel::kAbstract;
}

ClassLabel Reasoner::class_label(ObjectId c) const {
  return derive_labels(g_, c).labels.class_label;
}

ObjectId Reasoner::canonical(ObjectId x) const {
  auto it = canonical_.find(x);
  return it == canonical_.end() ? x : it->second;
}

ObjectId Reasoner::canonicalize(ObjectId x, CanonicalMode mode) const {
  if (mode == CanonicalMode::kLenient) return canonical(x);
  auto it = abstract_out_.find(x);
  if (it == abstract_out_.end()) return x;
  const auto& targets = it->second;
  const std::string& name = g_.text(x);
  if (targets.size() > 1) {
    throw Error(ErrorCode::kAmbiguousAbstract,
                "'" + name + "' has " + std::to_string(targets.size()) + " abstract to edges");
  }
  ObjectId target = targets.front();
  if (!is_abstract(target)) {
    throw Error(ErrorCode::kNonAbstractTarget,
                "'" + name + "' abstracts to '" + g_.text(target) +
                    "', which is not labeled Abstract");
  }
  if (abstract_out_.count(target) > 0) {
    throw Error(ErrorCode::kChainedAbstract,
                "'" + name + "' abstracts to '" + g_.text(target) +
                    "', which has an abstract to edge itself");
  }
  return target;
}

std::vector<ObjectId> Reasoner::equivalents(ObjectId x) const {
  ObjectId c = canonical(x);
  std::vector<ObjectId> out{c};
  if (auto it = aliases_.find(c); it != aliases_.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<ObjectId> Reasoner::type_closure(ObjectId x) const {
  return reachable(type_up_, canonical(x));
}

std::set<ObjectId> Reasoner::subrelation_closure(ObjectId r) const {
  std::set<ObjectId> out = reachable(rel_up_, r);
  out.insert(r);
  return out;
}

std::set<ObjectId> Reasoner::subrelations_of(ObjectId r) const {
  std::set<ObjectId> out = reachable(rel_down_, r);
  out.insert(r);
  return out;
}

std::optional<std::vector<Triple>> Reasoner::subrelation_path(ObjectId from, ObjectId to) const {
  if (from == to) return std::vector<Triple>{};
  std::map<ObjectId, ObjectId> parent;
  std::deque<ObjectId> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    ObjectId x = queue.front();
    queue.pop_front();
    for (ObjectId n : neighbors(rel_up_, x)) {
      if (!parent.emplace(n, x).second) continue;
      if (n == to) {
        std::vector<Triple> path;
        for (ObjectId cur = to; cur != from; cur = parent.at(cur)) {
          path.push_back(Triple{parent.at(cur), g_.reserved().sub_relation_of, cur});
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(n);
    }
  }
  return std::nullopt;
}

std::vector<Triple> Reasoner::infer_match(const Pattern& p, Regime regime) const {
  if (regime == Regime::kRaw) return g_.match(p);

  using Slot = std::optional<ObjectId>;
  auto expand = [&](const Slot& s) {
    std::vector<Slot> out;
    if (!s) {
      out.push_back(std::nullopt);
    } else {
      for (ObjectId e : equivalents(*s)) out.emplace_back(e);
    }
    return out;
  };
  std::vector<Slot> heads = expand(p.head);
  std::vector<Slot> tails = expand(p.tail);
  std::vector<Slot> relations;
  if (regime == Regime::kFull && p.relation) {
    for (ObjectId r : subrelations_of(*p.relation)) relations.emplace_back(r);
  } else {
    relations.push_back(p.relation);
  }

  std::set<Triple> found;
  for (const Slot& h : heads) {
    for (const Slot& r : relations) {
      for (const Slot& t : tails) {
        g_.visit(Pattern{h, r, t}, [&](const Triple& tr) { found.insert(tr); });
      }
    }
  }
  return {found.begin(), found.end()};
}

MembershipAnswer Reasoner::class_membership(ObjectId c) const {
  MembershipAnswer answer;
  g_.visit(Pattern{std::nullopt, g_.reserved().type, c},
           [&](const Triple& t) { answer.members.insert(canonical(t.head)); });
  answer.certainty =
      class_label(c) == ClassLabel::kComplete ? Certainty::kExact : Certainty::kLowerBound;
  return answer;
}

MembershipAnswer Reasoner::transitive_membership(ObjectId c) const {
  MembershipAnswer answer;
  answer.members = reachable(type_down_, canonical(c));
  bool exact = class_label(c) == ClassLabel::kComplete;
  for (ObjectId m : answer.members) {
    if (!exact) break;
    if (type_down_.count(m) > 0 && class_label(m) != ClassLabel::kComplete) exact = false;
  }
  answer.certainty = exact ? Certainty::kExact : Certainty::kLowerBound;
  return answer;
}

MemberCount Reasoner::count_members(ObjectId c) const {
  MembershipAnswer a = class_membership(c);
  return MemberCount{a.members.size(),
                     a.certainty == Certainty::kExact ? CountKind::kExact : CountKind::kAtLeast};
}

ObjectId canonicalize(const Graph& g, ObjectId x, CanonicalMode mode) {
  return Reasoner(g).canonicalize(x, mode);
}

std::set<ObjectId> type_closure(const Graph& g, ObjectId x) {
  return Reasoner(g).type_closure(x);
}

std::set<ObjectId> subrelation_closure(const Graph& g, ObjectId r) {
  return Reasoner(g).subrelation_closure(r);
}

std::vector<Triple> infer_match(const Graph& g, const Pattern& p, Regime regime) {
  if (regime == Regime::kRaw) return g.match(p);
  return Reasoner(g).infer_match(p, regime);
}

MembershipAnswer class_membership(const Graph& g, ObjectId c) {
  return Reasoner(g).class_membership(c);
}

MemberCount count_members(const Graph& g, ObjectId c) {
  return Reasoner(g).count_members(c);
}

namespace {

std::vector<ObjectId> tails_of(const Graph& g, ObjectId head, ObjectId relation) {
  std::vector<ObjectId> out;
  g.visit(Pattern{head, relation, std::nullopt},
          [&](const Triple& t) { out.push_back(t.tail); });
  return out;
}

std::vector<Triple> extras_of(const Graph& g, ObjectId event, const Triple& base) {
  const ReservedIds& r = g.reserved();
  const Triple skip[] = {
      {event, r.subject, base.head},
      {event, r.relation, base.relation},
      {event, r.object, base.tail},
      {event, r.text_label, r.description},
  };
  std::vector<Triple> out;
  g.visit(Pattern{event, std::nullopt, std::nullopt}, [&](const Triple& t) {
    if (std::find(std::begin(skip), std::end(skip), t) == std::end(skip)) out.push_back(t);
  });
  return out;
}

}  // namespace

EventReification reify(Graph& g, const Triple& base, std::optional<std::string_view> event_name) {
  if (!g.contains(base)) {
    throw Error(ErrorCode::kBaseNotAsserted,
                "cannot reify a triple that is not asserted");
  }
  std::string name = event_name ? std::string(*event_name)
                                : g.text(base.head) + " " + g.text(base.relation) + " " +
                                      g.text(base.tail);
  ObjectId event = g.intern(name);
  const ReservedIds r = g.reserved();

  const std::pair<ObjectId, ObjectId> positional[] = {
      {r.subject, base.head}, {r.relation, base.relation}, {r.object, base.tail}};
  for (const auto& [relation, expected] : positional) {
    for (ObjectId existing : tails_of(g, event, relation)) {
      if (existing != expected) {
        throw Error(ErrorCode::kEventNameCollision,
                    "event '" + g.text(event) + "' already reifies a different triple (" +
                        g.text(relation) + " '" + g.text(existing) + "')");
      }
    }
  }
  for (const auto& [relation, value] : positional) g.assert_triple(Triple{event, relation, value});
  g.assert_triple(Triple{event, r.text_label, r.description});
  return EventReification{event, base, extras_of(g, event, base)};
}

std::optional<EventReification> reification_of(const Graph& g, ObjectId event) {
  const ReservedIds& r = g.reserved();
  auto s = tails_of(g, event, r.subject);
  auto rel = tails_of(g, event, r.relation);
  auto o = tails_of(g, event, r.object);
  if (s.size() != 1 || rel.size() != 1 || o.size() != 1) return std::nullopt;
  Triple base{s.front(), rel.front(), o.front()};
  return EventReification{event, base, extras_of(g, event, base)};
}

std::vector<ObjectId> event_objects(const Graph& g) {
  const ReservedIds& r = g.reserved();
  std::set<ObjectId> events;
  for (ObjectId relation : {r.subject, r.relation, r.object}) {
    g.visit(Pattern{std::nullopt, relation, std::nullopt},
            [&](const Triple& t) { events.insert(t.head); });
  }
  return {events.begin(), events.end()};
}

}  // namespace onegraph
