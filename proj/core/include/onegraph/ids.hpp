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

#include <compare>
#include <cstdint>
#include <functional>

namespace onegraph {

// Dense handle of an interned text object. Only meaningful relative to the
// Dictionary that produced it.
struct ObjectId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(ObjectId, ObjectId) = default;
};

struct Triple {
  ObjectId head;
  ObjectId relation;
  ObjectId tail;

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

}  // namespace onegraph

template <>
struct std::hash<onegraph::ObjectId> {
  std::size_t operator()(onegraph::ObjectId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

template <>
struct std::hash<onegraph::Triple> {
  std::size_t operator()(const onegraph::Triple& t) const noexcept {
    std::uint64_t h = t.head.value;
    h = h * 0x9E3779B97F4A7C15ULL + t.relation.value;
    h = h * 0x9E3779B97F4A7C15ULL + t.tail.value;
    return std::hash<std::uint64_t>{}(h);
  }
};
