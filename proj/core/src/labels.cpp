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

#include "onegraph/labels.hpp"

#include <algorithm>

#include "onegraph/error.hpp"

namespace onegraph {

std::string_view to_string(TextLabel l) {
  switch (l) {
    case TextLabel::kName: return "Name";
    case TextLabel::kDescription: return "Description";
    case TextLabel::kDocument: return "Document";
    case TextLabel::kAbstract: return "Abstract";
  }
  return "";
}

std::string_view to_string(FormatLabel l) {
  switch (l) {
    case FormatLabel::kString: return "String";
    case FormatLabel::kTime: return "Time";
    case FormatLabel::kNumber: return "Number";
  }
  return "";
}

std::string_view to_string(ClassLabel l) {
  return l == ClassLabel::kComplete ? "Complete" : "Incomplete";
}

std::string_view to_string(LabelDimension d) {
  switch (d) {
    case LabelDimension::kText: return "text label";
    case LabelDimension::kFormat: return "format label";
    case LabelDimension::kClass: return "class label";
  }
  return "";
}

namespace {

std::optional<TextLabel> as_text_label(const ReservedIds& r, ObjectId v) {
  if (v == r.name) return TextLabel::kName;
  if (v == r.description) return TextLabel::kDescription;
  if (v == r.document) return TextLabel::kDocument;
  if (v == r.abstract) return TextLabel::kAbstract;
  return std::nullopt;
}

std::optional<FormatLabel> as_format_label(const ReservedIds& r, ObjectId v) {
  if (v == r.string) return FormatLabel::kString;
  if (v == r.time) return FormatLabel::kTime;
  if (v == r.number) return FormatLabel::kNumber;
  return std::nullopt;
}

std::optional<ClassLabel> as_class_label(const ReservedIds& r, ObjectId v) {
  if (v == r.complete) return ClassLabel::kComplete;
  if (v == r.incomplete) return ClassLabel::kIncomplete;
  return std::nullopt;
}

// Collects the marker values of one dimension. Returns the single value, or
// nullopt plus a conflict entry when there are several.
template <typename Label, typename Convert>
std::optional<Label> collect(const Graph& g, ObjectId obj, ObjectId relation,
                             LabelDimension dim, Convert convert, LabelDerivation& out) {
  std::vector<ObjectId> values;
  std::optional<Label> label;
  for (const Triple& t : g.match(Pattern{obj, relation, std::nullopt})) {
    auto converted = convert(g.reserved(), t.tail);
    if (!converted) {
      out.unknown_values.push_back(t);
      continue;
    }
    values.push_back(t.tail);
    label = converted;
  }
  if (values.size() > 1) {
    out.conflicts.push_back(LabelConflict{dim, std::move(values)});
    return std::nullopt;
  }
  return label;
}

}  // namespace

LabelDerivation derive_labels(const Graph& g, ObjectId obj) {
  const ReservedIds& r = g.reserved();
  LabelDerivation out;
  out.labels.text_label =
      collect<TextLabel>(g, obj, r.text_label, LabelDimension::kText, as_text_label, out);
  out.labels.format_label =
      collect<FormatLabel>(g, obj, r.format_label, LabelDimension::kFormat, as_format_label, out);
  out.labels.class_label =
      collect<ClassLabel>(g, obj, r.class_label, LabelDimension::kClass, as_class_label, out)
          .value_or(ClassLabel::kIncomplete);
  return out;
}

LabelSet label_set_of(const Graph& g, ObjectId obj) {
  LabelDerivation d = derive_labels(g, obj);
  if (!d.conflicts.empty()) {
    const LabelConflict& c = d.conflicts.front();
    std::string msg = "'" + g.text(obj) + "' has conflicting " +
                      std::string(to_string(c.dimension)) + " values:";
    for (ObjectId v : c.values) msg += " " + g.text(v);
    throw Error(ErrorCode::kConflictingLabel, msg);
  }
  return d.labels;
}

}  // namespace onegraph
