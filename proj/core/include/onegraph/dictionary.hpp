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
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onegraph/ids.hpp"

namespace onegraph {

// Interning table mapping normalized texts to dense ids.
//
// Value type: copies are independent. Not internally synchronized; callers
// follow the many-readers XOR one-writer contract (VersionedGraph enforces it
// for graphs).
class Dictionary {
 public:
  Dictionary() = default;

  // Normalizes `raw` (NFC + ASCII trim) and returns its id, allocating one if
  // needed. Throws Error(kEmptyText) if nothing is left after normalization.
  ObjectId intern(std::string_view raw);

  // Lookup without allocation. `raw` is normalized first.
  std::optional<ObjectId> find(std::string_view raw) const;

  // Lookup of an already-normalized text; skips normalization.
  std::optional<ObjectId> find_normalized(std::string_view text) const;

  // Throws Error(kUnknownId) for ids this dictionary never produced.
  const std::string& text(ObjectId id) const;

  bool contains(ObjectId id) const { return id.value < texts_.size(); }
  std::size_t size() const { return texts_.size(); }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  ObjectId intern_normalized(std::string text);

  std::vector<std::string> texts_;
  std::unordered_map<std::string, ObjectId, Hash, std::equal_to<>> ids_;
};

}  // namespace onegraph
