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

#include "onegraph/dictionary.hpp"

#include "onegraph/error.hpp"
#include "onegraph/text.hpp"

namespace onegraph {

ObjectId Dictionary::intern(std::string_view raw) {
  std::string text = normalize_text(raw);
  if (text.empty()) {
    throw Error(ErrorCode::kEmptyText, "text is empty after normalization");
  }
  return intern_normalized(std::move(text));
}

ObjectId Dictionary::intern_normalized(std::string text) {
  if (auto it = ids_.find(text); it != ids_.end()) return it->second;
  ObjectId id{static_cast<std::uint32_t>(texts_.size())};
  texts_.push_back(text);
  ids_.emplace(std::move(text), id);
  return id;
}

std::optional<ObjectId> Dictionary::find(std::string_view raw) const {
  if (!is_valid_utf8(raw)) return std::nullopt;
  return find_normalized(normalize_text(raw));
}

std::optional<ObjectId> Dictionary::find_normalized(std::string_view text) const {
  if (auto it = ids_.find(text); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& Dictionary::text(ObjectId id) const {
  if (!contains(id)) {
    throw Error(ErrorCode::kUnknownId, "unknown object id " + std::to_string(id.value));
  }
  return texts_[id.value];
}

}  // namespace onegraph
