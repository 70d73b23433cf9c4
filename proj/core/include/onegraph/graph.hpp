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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onegraph/dictionary.hpp"
#include "onegraph/ids.hpp"
#include "onegraph/ogtext.hpp"

namespace onegraph {

// Triple template; nullopt components are wildcards.
struct Pattern {
  std::optional<ObjectId> head;
  std::optional<ObjectId> relation;
  std::optional<ObjectId> tail;

  bool matches(const Triple& t) const {
    return (!head || *head == t.head) && (!relation || *relation == t.relation) &&
           (!tail || *tail == t.tail);
  }
};

enum class IndexOrder { kHRT, kRTH, kTHR };

enum class AssertResult { kInserted, kAlreadyPresent };
enum class RetractResult { kRemoved, kNotPresent };

enum class LogOp { kAssert, kRetract };

struct LogEntry {
  LogOp op = LogOp::kAssert;
  std::string line;  // .ogt wire line
  std::uint64_t seq = 0;

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

// Ids of the reserved vocabulary. Every Graph interns these first, so the
// values are identical across graphs.
struct ReservedIds {
  ObjectId type, text_label, format_label, class_label, abstract_to;
  ObjectId sub_relation_of, subject, relation, object;
  ObjectId name, description, document, abstract, complete, incomplete;
  ObjectId string, time, number;
};

// Deduplicated triple set with three sorted permutation indexes and an
// append-only mutation log. Value type; see VersionedGraph for sharing it
// between threads.
class Graph {
 public:
  Graph();

  const Dictionary& dictionary() const { return dict_; }

  ObjectId intern(std::string_view raw) { return dict_.intern(raw); }
  std::optional<ObjectId> find(std::string_view raw) const { return dict_.find(raw); }
  const std::string& text(ObjectId id) const { return dict_.text(id); }
  Triple intern_triple(const TextTriple& t);
  TextTriple texts(const Triple& t) const;

  // Throws Error(kUnknownId) if a component was not interned here.
  AssertResult assert_triple(const Triple& t);
  AssertResult assert_text(const TextTriple& t) { return assert_triple(intern_triple(t)); }
  RetractResult retract_triple(const Triple& t);
  bool contains(const Triple& t) const;

  std::size_t size() const { return hrt_.size(); }
  bool empty() const { return hrt_.empty(); }

  // Picks the index whose sort order has the bound components as a prefix.
  // Results are ordered lexicographically in that index's order.
  std::vector<Triple> match(const Pattern& p) const;
  std::vector<Triple> match_with(IndexOrder order, const Pattern& p) const;
  void visit(const Pattern& p, const std::function<void(const Triple&)>& fn) const;
  static IndexOrder best_index(const Pattern& p);

  // Every triple in (head, relation, tail) id order.
  std::vector<Triple> triples() const;

  const std::vector<LogEntry>& log() const { return log_; }

  // Bumped by every successful assert or retract.
  std::uint64_t version() const { return version_; }

  const ReservedIds& reserved() const { return reserved_; }

  // True for reserved texts and their declared aliases.
  bool is_reserved(ObjectId id) const;

  // Rebuilds a graph by applying `entries` to an empty graph. Wire lines are
  // taken verbatim (no alias rewriting). Throws Error(kCorruptLog) on a
  // malformed line.
  static Graph replay(std::span<const LogEntry> entries);

 private:
  using Key = std::array<std::uint32_t, 3>;

  const std::set<Key>& index(IndexOrder order) const;
  void scan(IndexOrder order, const Pattern& p,
            const std::function<void(const Triple&)>& fn) const;
  static Key to_key(IndexOrder order, const Triple& t);
  static Triple from_key(IndexOrder order, const Key& k);
  void require_interned(const Triple& t) const;
  void append_log(LogOp op, const Triple& t);

  Dictionary dict_;
  ReservedIds reserved_{};
  std::set<Key> hrt_;
  std::set<Key> rth_;
  std::set<Key> thr_;
  std::vector<LogEntry> log_;
  std::uint64_t version_ = 0;
};

// Parses a wire line without alias rewriting; used for logs and snapshots.
TextTriple parse_stored_line(std::string_view line);

}  // namespace onegraph
