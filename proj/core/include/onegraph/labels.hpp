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

#include <optional>
#include <string_view>
#include <vector>

#include "onegraph/graph.hpp"

namespace onegraph {

enum class TextLabel { kName, kDescription, kDocument, kAbstract };
enum class FormatLabel { kString, kTime, kNumber };
enum class ClassLabel { kIncomplete, kComplete };

std::string_view to_string(TextLabel l);
std::string_view to_string(FormatLabel l);
std::string_view to_string(ClassLabel l);

struct LabelSet {
  std::optional<TextLabel> text_label;
  std::optional<FormatLabel> format_label;
  ClassLabel class_label = ClassLabel::kIncomplete;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

enum class LabelDimension { kText, kFormat, kClass };

std::string_view to_string(LabelDimension d);

struct LabelConflict {
  LabelDimension dimension;
  std::vector<ObjectId> values;  // two or more distinct markers
};

// Labels derived from the label triples of one object. Conflicting
// dimensions are left at their default and listed in `conflicts`; label
// tails that are not markers of their dimension go to `unknown_values`.
struct LabelDerivation {
  LabelSet labels;
  std::vector<LabelConflict> conflicts;
  std::vector<Triple> unknown_values;
};

LabelDerivation derive_labels(const Graph& g, ObjectId obj);

// Throws Error(kConflictingLabel) if any dimension carries two values.
LabelSet label_set_of(const Graph& g, ObjectId obj);

}  // namespace onegraph
