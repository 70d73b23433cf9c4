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

#include "onegraph/ogtext.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "onegraph/text.hpp"
#include "onegraph/vocabulary.hpp"

namespace onegraph {

std::string_view severity_name(Severity s) {
  return s == Severity::kError ? "error" : "warning";
}

std::string_view diagnostic_code_name(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kFieldCount: return "FieldCountError";
    case DiagnosticCode::kEmptyField: return "EmptyFieldError";
    case DiagnosticCode::kBadEscape: return "BadEscapeError";
    case DiagnosticCode::kAliasNormalized: return "AliasNormalized";
    case DiagnosticCode::kNearDuplicateClass: return "NearDuplicateClass";
    case DiagnosticCode::kTruncatedLog: return "TruncatedLog";
  }
  return "Unknown";
}

std::string escape_field(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 4);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      out += "\\\\";
    } else if (c == '\n') {
      out += "\\n";
    } else if (c == '\t') {
      out += "\\t";
    } else if (text.substr(i, kSeparator.size()) == kSeparator) {
      out += "\\q";
      i += kSeparator.size() - 1;
    } else {
      out += c;
    }
  }
  return out;
}

std::string unescape_field(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    char c = field[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 >= field.size()) {
      throw Error(ErrorCode::kBadEscape, "dangling backslash at end of field");
    }
    char next = field[++i];
    switch (next) {
      case '\\': out += '\\'; break;
      case 'q': out += kSeparator; break;
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      default:
        throw Error(ErrorCode::kBadEscape,
                    std::string("unknown escape sequence \\") + next);
    }
  }
  return out;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(kSeparator, start);
    if (pos == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, pos - start));
    start = pos + kSeparator.size();
  }
  return fields;
}

std::string decode_field(std::string_view field) {
  std::string text = normalize_text(unescape_field(trim_ascii_whitespace(field)));
  if (text.empty()) throw Error(ErrorCode::kEmptyField, "empty field");
  return text;
}

std::vector<std::string> canonicalize_vocabulary(TextTriple& triple) {
  std::vector<std::string> rewrites;
  if (auto target = vocab::relation_alias_target(triple.relation)) {
    rewrites.push_back("relation '" + triple.relation + "' normalized to '" +
                       std::string(*target) + "'");
    triple.relation = std::string(*target);
  }
  if (auto marker = vocab::marker_for(triple.relation, triple.tail);
      marker && *marker != triple.tail) {
    rewrites.push_back("marker '" + triple.tail + "' normalized to '" +
                       std::string(*marker) + "'");
    triple.tail = std::string(*marker);
  }
  return rewrites;
}

ParsedLine parse_line(std::string_view line) {
  ParsedLine result;
  if (!line.empty() && line.front() == '#') {
    result.kind = LineKind::kComment;
    return result;
  }
  if (trim_ascii_whitespace(line).empty()) {
    result.kind = LineKind::kBlank;
    return result;
  }
  if (!is_valid_utf8(line)) {
    throw Error(ErrorCode::kInvalidUtf8, "line is not valid UTF-8");
  }
  auto fields = split_fields(line);
  if (fields.size() != 3) {
    throw Error(ErrorCode::kFieldCount,
                "expected 3 fields separated by \xE2\x96\xA1, found " +
                    std::to_string(fields.size()));
  }
  static constexpr const char* kNames[] = {"head", "relation", "tail"};
  std::string decoded[3];
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      decoded[i] = decode_field(fields[i]);
    } catch (const Error& e) {
      throw Error(e.code(), std::string(kNames[i]) + ": " + e.what());
    }
  }
  result.kind = LineKind::kTriple;
  result.triple = TextTriple{std::move(decoded[0]), std::move(decoded[1]),
                             std::move(decoded[2])};
  result.rewrites = canonicalize_vocabulary(result.triple);
  return result;
}

std::string serialize_text_triple(const TextTriple& triple) {
  std::string line;
  // A leading '#' would read back as a comment; a leading space is trimmed
  // away by the parser.
  if (!triple.head.empty() && triple.head.front() == '#') line += ' ';
  line += escape_field(triple.head);
  line += kSeparatorPadded;
  line += escape_field(triple.relation);
  line += kSeparatorPadded;
  line += escape_field(triple.tail);
  return line;
}

std::string serialize_triple(const Triple& triple, const Dictionary& dict) {
  return serialize_text_triple(
      TextTriple{dict.text(triple.head), dict.text(triple.relation), dict.text(triple.tail)});
}

std::size_t ParsedDocument::error_count() const {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(),
      [](const ParseDiagnostic& d) { return d.severity == Severity::kError; }));
}

std::size_t ParsedDocument::warning_count() const {
  return diagnostics.size() - error_count();
}

namespace {

DiagnosticCode diagnostic_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFieldCount: return DiagnosticCode::kFieldCount;
    case ErrorCode::kEmptyField:
    case ErrorCode::kEmptyText: return DiagnosticCode::kEmptyField;
    default: return DiagnosticCode::kBadEscape;
  }
}

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    auto c = static_cast<unsigned char>(s[i]);
    char32_t cp;
    std::size_t len;
    if (c < 0x80) {
      cp = c;
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      len = 3;
    } else {
      cp = c & 0x07;
      len = 4;
    }
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k) {
      cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

// Flags class names within edit distance 2 of an earlier class name, e.g. a
// misspelled class in one statement and the intended one in another.
void report_near_duplicate_classes(ParsedDocument& doc) {
  std::map<std::string, std::size_t> first_seen;  // class name -> line
  std::vector<std::pair<std::string, std::size_t>> ordered;
  for (std::size_t i = 0; i < doc.triples.size(); ++i) {
    const TextTriple& t = doc.triples[i];
    const std::string* name = nullptr;
    if (t.relation == vocab::kType) {
      name = &t.tail;
    } else if (t.relation == vocab::kClassLabel) {
      name = &t.head;
    }
    if (name == nullptr) continue;
    if (first_seen.emplace(*name, doc.line_numbers[i]).second) {
      ordered.emplace_back(*name, doc.line_numbers[i]);
    }
  }
  std::vector<std::u32string> decoded;
  decoded.reserve(ordered.size());
  for (const auto& [name, line] : ordered) decoded.push_back(decode_utf8(name));

  for (std::size_t j = 1; j < ordered.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = decoded[i];
      const auto& b = decoded[j];
      std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
      if (diff > 2) continue;
      if (edit_distance(ordered[i].first, ordered[j].first) > 2) continue;
      doc.diagnostics.push_back(ParseDiagnostic{
          ordered[j].second, Severity::kWarning, DiagnosticCode::kNearDuplicateClass,
          "class '" + ordered[j].first + "' is within edit distance 2 of class '" +
              ordered[i].first + "' (line " + std::to_string(ordered[i].second) +
              "); kept as distinct objects"});
    }
  }
}

void parse_one(ParsedDocument& doc, std::string_view line, std::size_t line_number) {
  if (!is_valid_utf8(line)) {
    throw Error(ErrorCode::kInvalidUtf8,
                "line " + std::to_string(line_number) + " is not valid UTF-8");
  }
  try {
    ParsedLine parsed = parse_line(line);
    if (parsed.kind != LineKind::kTriple) return;
    for (auto& note : parsed.rewrites) {
      doc.diagnostics.push_back(ParseDiagnostic{line_number, Severity::kWarning,
                                                DiagnosticCode::kAliasNormalized,
                                                std::move(note)});
    }
    doc.triples.push_back(std::move(parsed.triple));
    doc.line_numbers.push_back(line_number);
  } catch (const Error& e) {
    doc.diagnostics.push_back(ParseDiagnostic{line_number, Severity::kError,
                                              diagnostic_for(e.code()), e.what()});
  }
}

}  // namespace

ParsedDocument parse_document(std::istream& in) {
  ParsedDocument doc;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    parse_one(doc, line, line_number);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read error in input stream");
  report_near_duplicate_classes(doc);
  std::stable_sort(doc.diagnostics.begin(), doc.diagnostics.end(),
                   [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                     return a.line_number < b.line_number;
                   });
  return doc;
}

ParsedDocument parse_document(std::string_view content) {
  std::istringstream in{std::string(content)};
  return parse_document(in);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::u32string x = decode_utf8(a);
  std::u32string y = decode_utf8(b);
  std::vector<std::size_t> prev(y.size() + 1);
  std::vector<std::size_t> cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t cost = x[i - 1] == y[j - 1] ? 0 : 1;
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

}  // namespace onegraph
