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

#include <filesystem>
#include <span>
#include <string>

#include "onegraph/graph.hpp"
#include "onegraph/persistence.hpp"

namespace og {

// Advisory flock(2) on <store>/LOCK, released on destruction.
class FileLock {
 public:
  enum class Mode { kShared, kExclusive };

  // Throws onegraph::Error(kStoreLocked) if an exclusive lock is already
  // held elsewhere (exclusive requests never wait); kIo on other failures.
  FileLock(const std::filesystem::path& path, Mode mode);
  ~FileLock();

  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;
  FileLock(FileLock&& other) noexcept;
  FileLock& operator=(FileLock&&) = delete;

 private:
  int fd_ = -1;
};

// A store directory:
//
//   graph.ogt    snapshot (#ogsnapshot header + sorted wire lines)
//   graph.oglog  append-only log of "+ line" / "- line" entries
//   LOCK         lock file; writers hold it exclusively, readers shared
class StoreDir {
 public:
  enum class Access { kRead, kWrite };

  // Opens and locks the store. With `create`, a missing directory is
  // initialized with an empty snapshot and log. Throws Error(kIo) if the
  // store does not exist and `create` is false.
  static StoreDir open(const std::filesystem::path& dir, Access access, bool create);

  const std::filesystem::path& path() const { return dir_; }
  std::filesystem::path snapshot_path() const { return dir_ / "graph.ogt"; }
  std::filesystem::path log_path() const { return dir_ / "graph.oglog"; }

  onegraph::LoadResult load() const;

  // Appends entries to the log and flushes them to disk.
  void append_log(std::span<const onegraph::LogEntry> entries);

  // Atomically replaces the snapshot with `g` and empties the log.
  void checkpoint(const onegraph::Graph& g);

 private:
  StoreDir(std::filesystem::path dir, FileLock lock) : dir_(std::move(dir)), lock_(std::move(lock)) {}

  std::filesystem::path dir_;
  FileLock lock_;
};

}  // namespace og
