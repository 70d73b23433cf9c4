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

#include "onegraph/validate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "onegraph/labels.hpp"
#include "onegraph/literal_grammar.hpp"
#include "onegraph/semantics.hpp"

namespace onegraph {

std::string_view finding_code_name(FindingCode code) {
  switch (code) {
    case FindingCode::kAmbiguousAbstract: return "AmbiguousAbstract";
    case FindingCode::kNonAbstractTarget: return "NonAbstractTarget";
    case FindingCode::kChainedAbstract: return "ChainedAbstract";
    case FindingCode::kTypeCycle: return "TypeCycle";
    case FindingCode::kSubRelationCycle: return "SubRelationCycle";
    case FindingCode::kConflictingLabel: return "ConflictingLabel";
    case FindingCode::kUnknownLabelValue: return "UnknownLabelValue";
    case FindingCode::kDanglingReification: return "DanglingReification";
    case FindingCode::kIncompleteReification: return "IncompleteReification";
    case FindingCode::kAmbiguousReification: return "AmbiguousReification";
    case FindingCode::kBadTimeFormat: return "BadTimeFormat";
    case FindingCode::kBadNumberFormat: return "BadNumberFormat";
  }
  return "Unknown";
}

Severity finding_severity(FindingCode code) {
  switch (code) {
    case FindingCode::kUnknownLabelValue:
    case FindingCode::kBadTimeFormat:
    case FindingCode::kBadNumberFormat:
      return Severity::kWarning;
    default:
      return Severity::kError;
  }
}

namespace {

class Validator {
 public:
  explicit Validator(const Graph& g) : g_(g), reasoner_(g) {}

  std::vector<Finding> run() {
    check_abstract_edges();
    check_cycles(reasoner_.type_parents(), FindingCode::kTypeCycle, "type");
    check_cycles(reasoner_.super_relations(), FindingCode::kSubRelationCycle,
                 "sub-relation of");
    check_labels();
    check_reifications();
    std::sort(findings_.begin(), findings_.end(), [](const Finding& a, const Finding& b) {
      return std::tie(a.subject, a.code, a.message) < std::tie(b.subject, b.code, b.message);
    });
    return std::move(findings_);
  }

 private:
  void add(FindingCode code, ObjectId subject, std::string message) {
    findings_.push_back(
        Finding{finding_severity(code), code, g_.text(subject), std::move(message)});
  }

  void check_abstract_edges() {
    const auto& edges = reasoner_.abstract_edges();
    for (const auto& [x, targets] : edges) {
      if (targets.size() > 1) {
        std::vector<std::string> names;
        for (ObjectId t : targets) names.push_back("'" + g_.text(t) + "'");
        std::sort(names.begin(), names.end());
        std::string joined;
        for (const auto& n : names) joined += (joined.empty() ? "" : ", ") + n;
        add(FindingCode::kAmbiguousAbstract, x,
            std::to_string(targets.size()) + " abstract to edges: " + joined);
      }
      for (ObjectId t : targets) {
        if (!reasoner_.is_abstract(t)) {
          add(FindingCode::kNonAbstractTarget, x,
              "abstract to target '" + g_.text(t) + "' is not labeled Abstract");
        }
        if (edges.count(t) > 0) {
          add(FindingCode::kChainedAbstract, x,
              "abstract to target '" + g_.text(t) + "' has its own abstract to edge");
        }
      }
    }
  }

  // Tarjan's SCC; one finding per strongly connected component that contains
  // a cycle.
  void check_cycles(const std::unordered_map<ObjectId, std::set<ObjectId>>& adj,
                    FindingCode code, std::string_view relation) {
    std::map<ObjectId, int> index;
    std::map<ObjectId, int> low;
    std::set<ObjectId> on_stack;
    std::vector<ObjectId> stack;
    int counter = 0;

    std::vector<ObjectId> nodes;
    for (const auto& [n, _] : adj) nodes.push_back(n);
    std::sort(nodes.begin(), nodes.end());

    std::function<void(ObjectId)> strongconnect = [&](ObjectId v) {
      index[v] = low[v] = counter++;
      stack.push_back(v);
      on_stack.insert(v);
      if (auto it = adj.find(v); it != adj.end()) {
        for (ObjectId w : it->second) {
          if (!index.count(w)) {
            strongconnect(w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w)) {
            low[v] = std::min(low[v], index[w]);
          }
        }
      }
      if (low[v] != index[v]) return;
      std::vector<ObjectId> component;
      ObjectId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component.push_back(w);
      } while (w != v);
      bool self_loop = false;
      if (auto it = adj.find(v); it != adj.end()) self_loop = it->second.count(v) > 0;
      if (component.size() < 2 && !self_loop) return;

      std::vector<std::string> names;
      for (ObjectId c : component) names.push_back(g_.text(c));
      std::sort(names.begin(), names.end());
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "'" : ", '") + n + "'";
      ObjectId subject = *std::min_element(component.begin(), component.end(),
                                           [&](ObjectId a, ObjectId b) {
                                             return g_.text(a) < g_.text(b);
                                           });
      add(code, subject, std::string(relation) + " cycle among " + joined);
    };
    for (ObjectId n : nodes) {
      if (!index.count(n)) strongconnect(n);
    }
  }

  void check_labels() {
    const ReservedIds& r = g_.reserved();
    std::set<ObjectId> labeled;
    for (ObjectId rel : {r.text_label, r.format_label, r.class_label}) {
      g_.visit(Pattern{std::nullopt, rel, std::nullopt},
               [&](const Triple& t) { labeled.insert(t.head); });
    }
    for (ObjectId obj : labeled) {
      LabelDerivation d = derive_labels(g_, obj);
      for (const LabelConflict& c : d.conflicts) {
        std::vector<std::string> names;
        for (ObjectId v : c.values) names.push_back(g_.text(v));
        std::sort(names.begin(), names.end());
        std::string joined;
        for (const auto& n : names) joined += (joined.empty() ? "" : ", ") + n;
        add(FindingCode::kConflictingLabel, obj,
            "conflicting " + std::string(to_string(c.dimension)) + " values: " + joined);
      }
      for (const Triple& t : d.unknown_values) {
        add(FindingCode::kUnknownLabelValue, obj,
            "'" + g_.text(t.tail) + "' is not a valid " + g_.text(t.relation) + " value");
      }
      const std::string& text = g_.text(obj);
      if (d.labels.format_label == FormatLabel::kTime && !is_time_literal(text)) {
        add(FindingCode::kBadTimeFormat, obj, "labeled Time but not a recognized date or time");
      }
      if (d.labels.format_label == FormatLabel::kNumber && !is_number_literal(text)) {
        add(FindingCode::kBadNumberFormat, obj, "labeled Number but not a numeric literal");
      }
    }
  }

  void check_reifications() {
    const ReservedIds& r = g_.reserved();
    for (ObjectId event : event_objects(g_)) {
      std::vector<std::string> missing;
      std::vector<std::string> repeated;
      std::optional<ObjectId> parts[3];
      const ObjectId positional[3] = {r.subject, r.relation, r.object};
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<ObjectId> values;
        g_.visit(Pattern{event, positional[i], std::nullopt},
                 [&](const Triple& t) { values.push_back(t.tail); });
        if (values.empty()) missing.push_back(g_.text(positional[i]));
        if (values.size() > 1) repeated.push_back(g_.text(positional[i]));
        if (values.size() == 1) parts[i] = values.front();
      }
      auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
        return out;
      };
      if (!missing.empty()) {
        add(FindingCode::kIncompleteReification, event, "missing " + join(missing) + " edge");
      }
      if (!repeated.empty()) {
        add(FindingCode::kAmbiguousReification, event,
            "more than one " + join(repeated) + " edge");
      }
      if (parts[0] && parts[1] && parts[2] &&
          !g_.contains(Triple{*parts[0], *parts[1], *parts[2]})) {
        add(FindingCode::kDanglingReification, event,
            "reified triple '" +
                serialize_text_triple(TextTriple{g_.text(*parts[0]), g_.text(*parts[1]),
                                                 g_.text(*parts[2])}) +
                "' is not asserted");
      }
    }
  }

  const Graph& g_;
  Reasoner reasoner_;
  std::vector<Finding> findings_;
};

std::string single_line(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<Finding> validate(const Graph& g) { return Validator(g).run(); }

std::string format_finding(const Finding& f) {
  return std::string(severity_name(f.severity)) + " " +
         std::string(finding_code_name(f.code)) + " " + escape_field(f.subject) +
         " \xE2\x80\x94 " + single_line(f.message);
}

bool has_errors(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::kError; });
}

}  // namespace onegraph
