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

#include "onegraph/vocabulary.hpp"

#include <algorithm>
#include <span>

namespace onegraph::vocab {

namespace {

bool iequals_ascii(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; };
    if (lower(a[i]) != lower(b[i])) return false;
  }
  return true;
}

std::optional<std::string_view> find_marker(std::span<const std::string_view> markers,
                                            std::string_view text) {
  for (auto m : markers) {
    if (iequals_ascii(m, text)) return m;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string_view> relation_alias_target(std::string_view text) {
  if (text == "text type") return kTextLabel;
  if (text == "class type") return kClassLabel;
  return std::nullopt;
}

std::optional<std::string_view> marker_for(std::string_view label_relation,
                                           std::string_view text) {
  if (label_relation == kTextLabel) return find_marker(kTextLabelMarkers, text);
  if (label_relation == kFormatLabel) return find_marker(kFormatLabelMarkers, text);
  if (label_relation == kClassLabel) return find_marker(kClassLabelMarkers, text);
  return std::nullopt;
}

std::optional<std::string_view> canonical_reserved(std::string_view text) {
  for (auto r : kCoreRelations) {
    if (r == text) return r;
  }
  for (auto r : kAuxiliaryRelations) {
    if (r == text) return r;
  }
  if (auto alias = relation_alias_target(text)) return alias;
  if (auto m = find_marker(kTextLabelMarkers, text)) return m;
  if (auto m = find_marker(kFormatLabelMarkers, text)) return m;
  if (auto m = find_marker(kClassLabelMarkers, text)) return m;
  return std::nullopt;
}

bool is_label_relation(std::string_view text) {
  return text == kTextLabel || text == kFormatLabel || text == kClassLabel;
}

}  // namespace onegraph::vocab
