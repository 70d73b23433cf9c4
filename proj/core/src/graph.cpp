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

#include "onegraph/graph.hpp"

#include <limits>

#include "onegraph/error.hpp"
#include "onegraph/vocabulary.hpp"

namespace onegraph {

namespace {

constexpr std::uint32_t kMax = std::numeric_limits<std::uint32_t>::max();

}  // namespace

Graph::Graph() {
  std::array<ObjectId, vocab::kAllReserved.size()> ids{};
  for (std::size_t i = 0; i < vocab::kAllReserved.size(); ++i) {
    ids[i] = dict_.intern(vocab::kAllReserved[i]);
  }
  reserved_ = ReservedIds{ids[0],  ids[1],  ids[2],  ids[3],  ids[4],  ids[5],
                          ids[6],  ids[7],  ids[8],  ids[9],  ids[10], ids[11],
                          ids[12], ids[13], ids[14], ids[15], ids[16], ids[17]};
}

Triple Graph::intern_triple(const TextTriple& t) {
  return Triple{dict_.intern(t.head), dict_.intern(t.relation), dict_.intern(t.tail)};
}

TextTriple Graph::texts(const Triple& t) const {
  return TextTriple{dict_.text(t.head), dict_.text(t.relation), dict_.text(t.tail)};
}

void Graph::require_interned(const Triple& t) const {
  for (ObjectId id : {t.head, t.relation, t.tail}) {
    if (!dict_.contains(id)) {
      throw Error(ErrorCode::kUnknownId, "object id " + std::to_string(id.value) +
                                             " is not interned in this graph");
    }
  }
}

Graph::Key Graph::to_key(IndexOrder order, const Triple& t) {
  switch (order) {
    case IndexOrder::kHRT: return {t.head.value, t.relation.value, t.tail.value};
    case IndexOrder::kRTH: return {t.relation.value, t.tail.value, t.head.value};
    case IndexOrder::kTHR: return {t.tail.value, t.head.value, t.relation.value};
  }
  return {};
}

Triple Graph::from_key(IndexOrder order, const Key& k) {
  switch (order) {
    case IndexOrder::kHRT: return {ObjectId{k[0]}, ObjectId{k[1]}, ObjectId{k[2]}};
    case IndexOrder::kRTH: return {ObjectId{k[2]}, ObjectId{k[0]}, ObjectId{k[1]}};
    case IndexOrder::kTHR: return {ObjectId{k[1]}, ObjectId{k[2]}, ObjectId{k[0]}};
  }
  return {};
}

const std::set<Graph::Key>& Graph::index(IndexOrder order) const {
  switch (order) {
    case IndexOrder::kHRT: return hrt_;
    case IndexOrder::kRTH: return rth_;
    case IndexOrder::kTHR: return thr_;
  }
  return hrt_;
}

void Graph::append_log(LogOp op, const Triple& t) {
  std::uint64_t seq = log_.empty() ? 1 : log_.back().seq + 1;
  log_.push_back(LogEntry{op, serialize_triple(t, dict_), seq});
}

AssertResult Graph::assert_triple(const Triple& t) {
  require_interned(t);
  auto [it, inserted] = hrt_.insert(to_key(IndexOrder::kHRT, t));
  if (!inserted) return AssertResult::kAlreadyPresent;
  try {
    rth_.insert(to_key(IndexOrder::kRTH, t));
    thr_.insert(to_key(IndexOrder::kTHR, t));
    append_log(LogOp::kAssert, t);
  } catch (...) {
    hrt_.erase(to_key(IndexOrder::kHRT, t));
    rth_.erase(to_key(IndexOrder::kRTH, t));
    thr_.erase(to_key(IndexOrder::kTHR, t));
    throw;
  }
  ++version_;
  return AssertResult::kInserted;
}

RetractResult Graph::retract_triple(const Triple& t) {
  if (!dict_.contains(t.head) || !dict_.contains(t.relation) || !dict_.contains(t.tail)) {
    return RetractResult::kNotPresent;
  }
  if (hrt_.find(to_key(IndexOrder::kHRT, t)) == hrt_.end()) return RetractResult::kNotPresent;
  // Serialize first so a failure leaves the indexes untouched.
  append_log(LogOp::kRetract, t);
  hrt_.erase(to_key(IndexOrder::kHRT, t));
  rth_.erase(to_key(IndexOrder::kRTH, t));
  thr_.erase(to_key(IndexOrder::kTHR, t));
  ++version_;
  return RetractResult::kRemoved;
}

bool Graph::contains(const Triple& t) const {
  return hrt_.count(to_key(IndexOrder::kHRT, t)) > 0;
}

IndexOrder Graph::best_index(const Pattern& p) {
  const bool h = p.head.has_value();
  const bool r = p.relation.has_value();
  const bool t = p.tail.has_value();
  if (h && !r && t) return IndexOrder::kTHR;
  if (h) return IndexOrder::kHRT;
  if (r) return IndexOrder::kRTH;
  if (t) return IndexOrder::kTHR;
  return IndexOrder::kHRT;
}

void Graph::scan(IndexOrder order, const Pattern& p,
                 const std::function<void(const Triple&)>& fn) const {
  const auto& idx = index(order);

  // Bound components in this index's key order; the leading run of bound
  // components narrows the range, the rest is filtered.
  std::array<std::optional<ObjectId>, 3> in_order;
  switch (order) {
    case IndexOrder::kHRT: in_order = {p.head, p.relation, p.tail}; break;
    case IndexOrder::kRTH: in_order = {p.relation, p.tail, p.head}; break;
    case IndexOrder::kTHR: in_order = {p.tail, p.head, p.relation}; break;
  }
  Key lo{0, 0, 0};
  Key hi{kMax, kMax, kMax};
  for (std::size_t i = 0; i < 3 && in_order[i]; ++i) {
    lo[i] = hi[i] = in_order[i]->value;
  }
  for (auto it = idx.lower_bound(lo); it != idx.end() && *it <= hi; ++it) {
    Triple t = from_key(order, *it);
    if (p.matches(t)) fn(t);
  }
}

void Graph::visit(const Pattern& p, const std::function<void(const Triple&)>& fn) const {
  scan(best_index(p), p, fn);
}

std::vector<Triple> Graph::match(const Pattern& p) const {
  return match_with(best_index(p), p);
}

std::vector<Triple> Graph::match_with(IndexOrder order, const Pattern& p) const {
  std::vector<Triple> out;
  scan(order, p, [&](const Triple& t) { out.push_back(t); });
  return out;
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(hrt_.size());
  for (const Key& k : hrt_) out.push_back(from_key(IndexOrder::kHRT, k));
  return out;
}

bool Graph::is_reserved(ObjectId id) const {
  return vocab::is_reserved_text(dict_.text(id));
}

TextTriple parse_stored_line(std::string_view line) {
  auto fields = split_fields(line);
  if (fields.size() != 3) {
    throw Error(ErrorCode::kFieldCount, "stored line does not have 3 fields");
  }
  return TextTriple{decode_field(fields[0]), decode_field(fields[1]), decode_field(fields[2])};
}

Graph Graph::replay(std::span<const LogEntry> entries) {
  Graph g;
  for (const LogEntry& e : entries) {
    TextTriple t;
    try {
      t = parse_stored_line(e.line);
    } catch (const Error& err) {
      throw Error(ErrorCode::kCorruptLog,
                  "log entry " + std::to_string(e.seq) + ": " + err.what());
    }
    if (e.op == LogOp::kAssert) {
      g.assert_text(t);
    } else if (auto h = g.find(t.head), r = g.find(t.relation), tl = g.find(t.tail);
               h && r && tl) {
      g.retract_triple(Triple{*h, *r, *tl});
    }
  }
  return g;
}

}  // namespace onegraph
