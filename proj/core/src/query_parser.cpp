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

#include <algorithm>
#include <cctype>

#include "onegraph/error.hpp"
#include "onegraph/ogtext.hpp"
#include "onegraph/query.hpp"
#include "onegraph/text.hpp"
#include "onegraph/vocabulary.hpp"

namespace onegraph {

namespace {

[[noreturn]] void syntax_error(std::size_t line, std::string_view text, std::size_t byte_offset,
                               const std::string& message) {
  std::size_t column = utf8_length(text.substr(0, std::min(byte_offset, text.size()))) + 1;
  throw Error(ErrorCode::kQuerySyntax, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + message);
}

bool is_var_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

// Byte offset of the first non-whitespace character of `field` in `line`.
std::size_t field_offset(std::string_view line, std::string_view field) {
  std::size_t offset = static_cast<std::size_t>(field.data() - line.data());
  std::string_view trimmed = trim_ascii_whitespace(field);
  if (!trimmed.empty()) offset = static_cast<std::size_t>(trimmed.data() - line.data());
  return offset;
}

std::optional<std::string> parse_var(std::size_t line_number, std::string_view line,
                                     std::string_view token) {
  if (token.empty() || token.front() != '?') return std::nullopt;
  std::string_view name = token.substr(1);
  std::size_t offset = static_cast<std::size_t>(token.data() - line.data());
  if (name.empty()) syntax_error(line_number, line, offset, "empty variable name");
  for (std::size_t i = 0; i < name.size(); ++i) {
    if (!is_var_char(name[i])) {
      syntax_error(line_number, line, offset + 1 + i,
                   "invalid character in variable name '" + std::string(token) + "'");
    }
  }
  return std::string(name);
}

bool keyword(std::string_view line, std::string_view word, std::string_view& rest) {
  if (line.substr(0, word.size()) != word) return false;
  if (line.size() > word.size() && line[word.size()] != ' ' && line[word.size()] != '\t') {
    return false;
  }
  rest = line.substr(word.size());
  return true;
}

}  // namespace

Query parse_query(std::string_view text, Regime default_regime) {
  Query q;
  q.regime = default_regime;
  bool regime_seen = false;
  bool select_seen = false;

  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!is_valid_utf8(line)) syntax_error(line_number, line, 0, "line is not valid UTF-8");

    std::string_view trimmed = trim_ascii_whitespace(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    std::size_t lead = static_cast<std::size_t>(trimmed.data() - line.data());

    std::string_view rest;
    if (keyword(trimmed, "REGIME", rest)) {
      if (regime_seen) syntax_error(line_number, line, lead, "duplicate REGIME line");
      std::string_view value = trim_ascii_whitespace(rest);
      auto regime = parse_regime(value);
      if (!regime) {
        syntax_error(line_number, line, static_cast<std::size_t>(value.data() - line.data()),
                     "unknown regime '" + std::string(value) + "' (expected raw, canonical or full)");
      }
      q.regime = *regime;
      regime_seen = true;
      continue;
    }
    if (keyword(trimmed, "SELECT", rest)) {
      if (select_seen) syntax_error(line_number, line, lead, "duplicate SELECT line");
      select_seen = true;
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
        if (i >= rest.size()) break;
        std::size_t start = i;
        while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t') ++i;
        std::string_view token = rest.substr(start, i - start);
        auto var = parse_var(line_number, line, token);
        if (!var) {
          syntax_error(line_number, line, static_cast<std::size_t>(token.data() - line.data()),
                       "SELECT expects ?variables, got '" + std::string(token) + "'");
        }
        q.projection.push_back(*var);
      }
      if (q.projection.empty()) syntax_error(line_number, line, lead, "SELECT without variables");
      continue;
    }

    auto fields = split_fields(line);
    if (fields.size() != 3) {
      syntax_error(line_number, line, lead,
                   "expected 3 fields separated by \xE2\x96\xA1, found " +
                       std::to_string(fields.size()));
    }
    Term terms[3];
    for (std::size_t i = 0; i < 3; ++i) {
      std::string_view field = trim_ascii_whitespace(fields[i]);
      std::size_t offset = field_offset(line, fields[i]);
      if (auto var = parse_var(line_number, line, field)) {
        terms[i] = Var{*var};
        continue;
      }
      try {
        terms[i] = decode_field(field);
      } catch (const Error& e) {
        syntax_error(line_number, line, offset, e.what());
      }
    }
    // Same alias rules as data files.
    if (auto* rel = std::get_if<std::string>(&terms[1])) {
      if (auto target = vocab::relation_alias_target(*rel)) *rel = std::string(*target);
      if (auto* tail = std::get_if<std::string>(&terms[2])) {
        if (auto marker = vocab::marker_for(*rel, *tail)) *tail = std::string(*marker);
      }
    }
    q.patterns.push_back(VarPattern{std::move(terms[0]), std::move(terms[1]), std::move(terms[2])});
  }
  if (q.patterns.empty()) {
    throw Error(ErrorCode::kQuerySyntax, "line " + std::to_string(line_number) +
                                             ", column 1: query has no patterns");
  }
  return q;
}

}  // namespace onegraph
