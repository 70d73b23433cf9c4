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
#include <optional>
#include <string_view>

namespace onegraph::vocab {

// Relations every graph carries before any user data is loaded.
inline constexpr std::string_view kType = "type";
inline constexpr std::string_view kTextLabel = "text label";
inline constexpr std::string_view kFormatLabel = "format label";
inline constexpr std::string_view kClassLabel = "class label";
inline constexpr std::string_view kAbstractTo = "abstract to";

// Auxiliary relations.
inline constexpr std::string_view kSubRelationOf = "sub-relation of";
inline constexpr std::string_view kSubject = "subject";
inline constexpr std::string_view kRelation = "relation";
inline constexpr std::string_view kObject = "object";

// Label markers.
inline constexpr std::string_view kName = "Name";
inline constexpr std::string_view kDescription = "Description";
inline constexpr std::string_view kDocument = "Document";
inline constexpr std::string_view kAbstract = "Abstract";
inline constexpr std::string_view kComplete = "Complete";
inline constexpr std::string_view kIncomplete = "Incomplete";
inline constexpr std::string_view kString = "String";
inline constexpr std::string_view kTime = "Time";
inline constexpr std::string_view kNumber = "Number";

inline constexpr std::array<std::string_view, 5> kCoreRelations = {
    kType, kTextLabel, kFormatLabel, kClassLabel, kAbstractTo};

inline constexpr std::array<std::string_view, 4> kAuxiliaryRelations = {
    kSubRelationOf, kSubject, kRelation, kObject};

inline constexpr std::array<std::string_view, 4> kTextLabelMarkers = {
    kName, kDescription, kDocument, kAbstract};
inline constexpr std::array<std::string_view, 3> kFormatLabelMarkers = {
    kString, kTime, kNumber};
inline constexpr std::array<std::string_view, 2> kClassLabelMarkers = {
    kComplete, kIncomplete};

// Every canonical reserved text, in a fixed order. Graphs intern these first.
inline constexpr std::array<std::string_view, 18> kAllReserved = {
    kType,     kTextLabel,   kFormatLabel, kClassLabel, kAbstractTo, kSubRelationOf,
    kSubject,  kRelation,    kObject,      kName,       kDescription, kDocument,
    kAbstract, kComplete,    kIncomplete,  kString,     kTime,        kNumber};

// Canonical relation for an alias spelling ("text type" -> "text label",
// "class type" -> "class label"); nullopt when `text` is not an alias.
std::optional<std::string_view> relation_alias_target(std::string_view text);

// Canonical marker for `text` when it is an ASCII case-variant of one of the
// markers valid as tail of `label_relation` (e.g. "time" -> "Time" under
// "format label"). Returns the canonical spelling even for exact matches.
std::optional<std::string_view> marker_for(std::string_view label_relation,
                                           std::string_view text);

// Canonical reserved spelling for any reserved text or declared alias.
std::optional<std::string_view> canonical_reserved(std::string_view text);

inline bool is_reserved_text(std::string_view text) {
  return canonical_reserved(text).has_value();
}

bool is_label_relation(std::string_view text);

}  // namespace onegraph::vocab
