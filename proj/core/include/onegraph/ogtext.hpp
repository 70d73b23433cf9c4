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

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "onegraph/dictionary.hpp"
#include "onegraph/error.hpp"
#include "onegraph/ids.hpp"

namespace onegraph {

// "□" (U+25A1 WHITE SQUARE) in UTF-8.
inline constexpr std::string_view kSeparator = "\xE2\x96\xA1";

// Separator as emitted by the serializer: SPACE U+25A1 SPACE.
inline constexpr std::string_view kSeparatorPadded = " \xE2\x96\xA1 ";

// Triple of normalized texts, before interning.
struct TextTriple {
  std::string head;
  std::string relation;
  std::string tail;

  friend auto operator<=>(const TextTriple&, const TextTriple&) = default;
};

enum class Severity { kError, kWarning };

std::string_view severity_name(Severity s);

enum class DiagnosticCode {
  kFieldCount,
  kEmptyField,
  kBadEscape,
  kAliasNormalized,
  kNearDuplicateClass,
  kTruncatedLog,
};

std::string_view diagnostic_code_name(DiagnosticCode code);

struct ParseDiagnostic {
  std::size_t line_number = 0;  // 1-based
  Severity severity = Severity::kError;
  DiagnosticCode code = DiagnosticCode::kFieldCount;
  std::string message;
};

enum class LineKind { kTriple, kComment, kBlank };

struct ParsedLine {
  LineKind kind = LineKind::kBlank;
  TextTriple triple;                  // set iff kind == kTriple
  std::vector<std::string> rewrites;  // alias normalizations applied
};

// Escapes one field: \ -> \\, U+25A1 -> \q, LF -> \n, TAB -> \t.
std::string escape_field(std::string_view text);

// Inverse of escape_field. Throws Error(kBadEscape) on an unknown or
// dangling escape sequence.
std::string unescape_field(std::string_view field);

// Splits on raw U+25A1. Escapes are not interpreted.
std::vector<std::string_view> split_fields(std::string_view line);

// Unescapes and normalizes one field. Throws kBadEscape / kEmptyField /
// kInvalidUtf8.
std::string decode_field(std::string_view field);

// Rewrites relation aliases and label-marker case variants to their canonical
// spellings. Returns a description per rewrite.
std::vector<std::string> canonicalize_vocabulary(TextTriple& triple);

// Parses one line (no trailing newline). Throws Error with kFieldCount,
// kEmptyField, kBadEscape or kInvalidUtf8 for rejected lines.
ParsedLine parse_line(std::string_view line);

std::string serialize_text_triple(const TextTriple& triple);

// Throws Error(kUnknownId) if any id is not in `dict`.
std::string serialize_triple(const Triple& triple, const Dictionary& dict);

struct ParsedDocument {
  std::vector<TextTriple> triples;
  std::vector<std::size_t> line_numbers;  // parallel to triples
  std::vector<ParseDiagnostic> diagnostics;

  std::size_t error_count() const;
  std::size_t warning_count() const;
};

// Best-effort parse: bad lines become Error diagnostics and are skipped.
// Throws Error(kInvalidUtf8) if a line is not UTF-8 and Error(kIo) if the
// stream fails.
ParsedDocument parse_document(std::istream& in);
ParsedDocument parse_document(std::string_view content);

// Levenshtein distance over codepoints.
std::size_t edit_distance(std::string_view a, std::string_view b);

}  // namespace onegraph
