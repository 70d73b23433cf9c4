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

#include "onegraph/persistence.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iterator>
#include <sstream>

#include "onegraph/error.hpp"

namespace onegraph {

namespace {

std::string read_all(std::istream& in) {
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorCode::kIo, "read error");
  return data;
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

struct SnapshotHeader {
  std::size_t count = 0;
  std::uint32_t checksum = 0;
};

SnapshotHeader parse_header(std::string_view line) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::kCorruptSnapshot, "bad snapshot header: " + why);
  };
  std::istringstream in{std::string(line)};
  std::string magic, version, count, checksum, extra;
  in >> magic >> version >> count >> checksum;
  if (magic != kSnapshotMagic) fail("missing " + std::string(kSnapshotMagic));
  if (version != kSnapshotVersion) fail("unsupported version '" + version + "'");
  if (in >> extra) fail("trailing data");
  SnapshotHeader h;
  auto [p1, e1] = std::from_chars(count.data(), count.data() + count.size(), h.count);
  if (e1 != std::errc() || p1 != count.data() + count.size()) fail("bad triple count");
  if (checksum.size() != 8) fail("bad checksum");
  auto [p2, e2] = std::from_chars(checksum.data(), checksum.data() + 8, h.checksum, 16);
  if (e2 != std::errc() || p2 != checksum.data() + 8) fail("bad checksum");
  return h;
}

}  // namespace

std::uint32_t crc32_of(std::string_view bytes) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  const auto* data = reinterpret_cast<const Bytef*>(bytes.data());
  std::size_t remaining = bytes.size();
  while (remaining > 0) {
    uInt chunk = static_cast<uInt>(std::min<std::size_t>(remaining, 1u << 30));
    crc = ::crc32(crc, data, chunk);
    data += chunk;
    remaining -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

void write_snapshot_lines(std::ostream& out, std::vector<std::string> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::string body;
  for (const auto& l : lines) {
    body += l;
    body += '\n';
  }
  out << kSnapshotMagic << ' ' << kSnapshotVersion << ' ' << lines.size() << ' '
      << hex8(crc32_of(body)) << '\n'
      << body;
}

void save_snapshot(const Graph& g, std::ostream& out) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const Triple& t : g.triples()) lines.push_back(serialize_triple(t, g.dictionary()));
  write_snapshot_lines(out, std::move(lines));
}

std::string snapshot_string(const Graph& g) {
  std::ostringstream out;
  save_snapshot(g, out);
  return out.str();
}

std::string format_log_entry(const LogEntry& e) {
  return (e.op == LogOp::kAssert ? "+ " : "- ") + e.line;
}

void write_log(std::ostream& out, std::span<const LogEntry> entries) {
  for (const LogEntry& e : entries) out << format_log_entry(e) << '\n';
}

std::size_t apply_log(Graph& g, std::string_view log_text,
                      std::vector<ParseDiagnostic>& diagnostics) {
  std::size_t applied = 0;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < log_text.size()) {
    ++line_number;
    std::size_t nl = log_text.find('\n', pos);
    if (nl == std::string_view::npos) {
      diagnostics.push_back(ParseDiagnostic{
          line_number, Severity::kWarning, DiagnosticCode::kTruncatedLog,
          "partial trailing log entry dropped (" + std::to_string(log_text.size() - pos) +
              " bytes)"});
      break;
    }
    std::string_view line = log_text.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.empty()) continue;
    if (line.size() < 2 || (line[0] != '+' && line[0] != '-') || line[1] != ' ') {
      throw Error(ErrorCode::kCorruptLog,
                  "log line " + std::to_string(line_number) + ": expected '+ ' or '- ' prefix");
    }
    TextTriple t;
    try {
      t = parse_stored_line(line.substr(2));
    } catch (const Error& e) {
      throw Error(ErrorCode::kCorruptLog,
                  "log line " + std::to_string(line_number) + ": " + e.what());
    }
    if (line[0] == '+') {
      g.assert_text(t);
    } else if (auto h = g.find(t.head), r = g.find(t.relation), tl = g.find(t.tail);
               h && r && tl) {
      g.retract_triple(Triple{*h, *r, *tl});
    }
    ++applied;
  }
  return applied;
}

LoadResult load(std::string_view snapshot, std::string_view log) {
  LoadResult result;
  if (!snapshot.empty()) {
    std::size_t nl = snapshot.find('\n');
    if (nl == std::string_view::npos) {
      throw Error(ErrorCode::kCorruptSnapshot, "snapshot header is not LF-terminated");
    }
    SnapshotHeader header = parse_header(snapshot.substr(0, nl));
    std::string_view body = snapshot.substr(nl + 1);
    if (crc32_of(body) != header.checksum) {
      throw Error(ErrorCode::kCorruptSnapshot, "snapshot checksum mismatch");
    }
    if (!body.empty() && body.back() != '\n') {
      throw Error(ErrorCode::kCorruptSnapshot, "snapshot body is not LF-terminated");
    }
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t end = body.find('\n', pos);
      std::string_view line = body.substr(pos, end - pos);
      pos = end + 1;
      try {
        result.graph.assert_text(parse_stored_line(line));
      } catch (const Error& e) {
        throw Error(ErrorCode::kCorruptSnapshot,
                    "snapshot line " + std::to_string(count + 2) + ": " + e.what());
      }
      ++count;
    }
    if (count != header.count) {
      throw Error(ErrorCode::kCorruptSnapshot,
                  "snapshot header declares " + std::to_string(header.count) +
                      " triples, body has " + std::to_string(count));
    }
    result.snapshot_triples = count;
  }
  result.log_entries = apply_log(result.graph, log, result.diagnostics);
  return result;
}

LoadResult load(std::istream& snapshot, std::istream& log) {
  std::string s = read_all(snapshot);
  std::string l = read_all(log);
  return load(std::string_view(s), std::string_view(l));
}

}  // namespace onegraph
