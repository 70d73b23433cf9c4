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

#include "og/store_dir.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "onegraph/error.hpp"

namespace og {

using onegraph::Error;
using onegraph::ErrorCode;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + p.string());
  return buf.str();
}

void write_fully(int fd, std::string_view data, const std::filesystem::path& p) {
  while (!data.empty()) {
    ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, "write to " + p.string() + " failed: " + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

void write_file_durably(const std::filesystem::path& p, std::string_view data, int flags) {
  int fd = ::open(p.c_str(), O_WRONLY | O_CREAT | flags, 0644);
  if (fd < 0) throw Error(ErrorCode::kIo, "cannot open " + p.string() + ": " + std::strerror(errno));
  try {
    write_fully(fd, data, p);
    if (::fsync(fd) != 0) {
      throw Error(ErrorCode::kIo, "fsync " + p.string() + " failed: " + std::strerror(errno));
    }
  } catch (...) {
    ::close(fd);
    throw;
  }
  ::close(fd);
}

}  // namespace

FileLock::FileLock(const std::filesystem::path& path, Mode mode) {
  fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
  if (fd_ < 0) {
    throw Error(ErrorCode::kIo, "cannot open lock file " + path.string() + ": " + std::strerror(errno));
  }
  int op = mode == Mode::kExclusive ? (LOCK_EX | LOCK_NB) : LOCK_SH;
  while (::flock(fd_, op) != 0) {
    if (errno == EINTR) continue;
    int err = errno;
    ::close(fd_);
    fd_ = -1;
    if (err == EWOULDBLOCK) {
      throw Error(ErrorCode::kStoreLocked, "store is locked by another writer: " + path.string());
    }
    throw Error(ErrorCode::kIo, "cannot lock " + path.string() + ": " + std::strerror(err));
  }
}

FileLock::~FileLock() {
  if (fd_ >= 0) ::close(fd_);  // closing releases the flock
}

FileLock::FileLock(FileLock&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }

StoreDir StoreDir::open(const std::filesystem::path& dir, Access access, bool create) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    if (!create) throw Error(ErrorCode::kIo, "store directory does not exist: " + dir.string());
    std::filesystem::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  }
  FileLock lock(dir / "LOCK", access == Access::kWrite ? FileLock::Mode::kExclusive
                                                        : FileLock::Mode::kShared);
  StoreDir store(dir, std::move(lock));
  if (!std::filesystem::exists(store.snapshot_path())) {
    if (access != Access::kWrite) {
      throw Error(ErrorCode::kIo, "not a store (missing graph.ogt): " + dir.string());
    }
    store.checkpoint(onegraph::Graph{});
  }
  return store;
}

onegraph::LoadResult StoreDir::load() const {
  std::string snapshot = read_file(snapshot_path());
  std::string log;
  if (std::filesystem::exists(log_path())) log = read_file(log_path());
  return onegraph::load(std::string_view(snapshot), std::string_view(log));
}

void StoreDir::append_log(std::span<const onegraph::LogEntry> entries) {
  if (entries.empty()) return;
  std::ostringstream buf;
  onegraph::write_log(buf, entries);
  write_file_durably(log_path(), buf.str(), O_APPEND);
}

void StoreDir::checkpoint(const onegraph::Graph& g) {
  auto tmp = dir_ / "graph.ogt.tmp";
  write_file_durably(tmp, onegraph::snapshot_string(g), O_TRUNC);
  std::error_code ec;
  std::filesystem::rename(tmp, snapshot_path(), ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot replace snapshot: " + ec.message());
  write_file_durably(log_path(), "", O_TRUNC);
}

}  // namespace og
