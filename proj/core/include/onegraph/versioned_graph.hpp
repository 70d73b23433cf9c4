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

#include <memory>
#include <mutex>
#include <type_traits>
#include <utility>

#include "onegraph/graph.hpp"

namespace onegraph {

// Snapshot isolation over a Graph. Readers take an immutable snapshot and may
// use it for as long as they like; writers are serialized and work on a
// private copy that is published atomically when the write function returns.
// A write that throws publishes nothing.
class VersionedGraph {
 public:
  VersionedGraph() : current_(std::make_shared<const Graph>()) {}
  explicit VersionedGraph(Graph initial)
      : current_(std::make_shared<const Graph>(std::move(initial))) {}

  std::shared_ptr<const Graph> snapshot() const {
    std::lock_guard lock(publish_mutex_);
    return current_;
  }

  template <typename Fn>
  auto write(Fn&& fn) -> std::invoke_result_t<Fn, Graph&> {
    std::lock_guard writer(writer_mutex_);
    auto next = std::make_shared<Graph>(*snapshot());
    if constexpr (std::is_void_v<std::invoke_result_t<Fn, Graph&>>) {
      std::forward<Fn>(fn)(*next);
      publish(std::move(next));
    } else {
      auto result = std::forward<Fn>(fn)(*next);
      publish(std::move(next));
      return result;
    }
  }

 private:
  void publish(std::shared_ptr<Graph> next) {
    std::shared_ptr<const Graph> frozen = std::move(next);
    std::lock_guard lock(publish_mutex_);
    current_.swap(frozen);
  }

  mutable std::mutex publish_mutex_;
  std::mutex writer_mutex_;
  std::shared_ptr<const Graph> current_;
};

}  // namespace onegraph
