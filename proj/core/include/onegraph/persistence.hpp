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

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onegraph/graph.hpp"
#include "onegraph/ogtext.hpp"

namespace onegraph {

// Snapshot layout:
//
//   #ogsnapshot v1 <triple-count> <crc32 as 8 lowercase hex digits>
//   <wire line>
//   ...
//
// Body lines are sorted bytewise and LF-terminated; the checksum covers the
// body bytes only. Since the header is a comment, a snapshot is also a valid
// .ogt document.
inline constexpr std::string_view kSnapshotMagic = "#ogsnapshot";
inline constexpr std::string_view kSnapshotVersion = "v1";

std::uint32_t crc32_of(std::string_view bytes);

// Sorts and deduplicates `lines`, then writes header + body.
void write_snapshot_lines(std::ostream& out, std::vector<std::string> lines);

void save_snapshot(const Graph& g, std::ostream& out);
std::string snapshot_string(const Graph& g);

// Log line for an entry: "+ <wire line>" or "- <wire line>".
std::string format_log_entry(const LogEntry& e);

void write_log(std::ostream& out, std::span<const LogEntry> entries);

struct LoadResult {
  Graph graph;
  std::vector<ParseDiagnostic> diagnostics;  // TruncatedLog warnings
  std::size_t snapshot_triples = 0;
  std::size_t log_entries = 0;  // complete entries applied from the log
};

// Rebuilds a graph from a snapshot followed by a log. The resulting graph's
// in-memory log holds one Assert per snapshot triple (in snapshot order)
// followed by the replayed entries, so Graph::replay(g.log()) reproduces it.
//
// Errors: kCorruptSnapshot on a bad header, count or checksum mismatch, or an
// unparsable body line; kCorruptLog on a malformed complete log line. A
// final log line without a terminating LF is dropped with a TruncatedLog
// warning.
LoadResult load(std::istream& snapshot, std::istream& log);
LoadResult load(std::string_view snapshot, std::string_view log);

// Applies log text to an existing graph; returns the number of entries.
std::size_t apply_log(Graph& g, std::string_view log_text,
                      std::vector<ParseDiagnostic>& diagnostics);

}  // namespace onegraph
