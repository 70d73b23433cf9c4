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

#include "onegraph/literal_grammar.hpp"

#include <chrono>

namespace onegraph {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads exactly `n` digits at `pos`; advances pos.
bool read_fixed(std::string_view s, std::size_t& pos, std::size_t n, int& value) {
  if (pos + n > s.size()) return false;
  value = 0;
  for (std::size_t i = 0; i < n; ++i) {
    char c = s[pos + i];
    if (!is_digit(c)) return false;
    value = value * 10 + (c - '0');
  }
  pos += n;
  return true;
}

bool valid_date(int y, int m, int d) {
  using namespace std::chrono;
  return year_month_day{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}}
      .ok();
}

std::size_t skip_digits(std::string_view s, std::size_t pos) {
  while (pos < s.size() && is_digit(s[pos])) ++pos;
  return pos;
}

}  // namespace

bool is_time_literal(std::string_view s) {
  std::size_t pos = 0;
  int year = 0;
  if (!read_fixed(s, pos, 4, year)) return false;
  if (pos == s.size()) return true;

  const char sep = s[pos];
  if (sep != '-' && sep != '.') return false;
  ++pos;
  int month = 0;
  if (!read_fixed(s, pos, 2, month) || month < 1 || month > 12) return false;
  if (pos == s.size()) return sep == '-';

  if (s[pos] != sep) return false;
  ++pos;
  int day = 0;
  if (!read_fixed(s, pos, 2, day) || !valid_date(year, month, day)) return false;
  if (pos == s.size()) return true;
  if (sep != '-') return false;

  if (s[pos] != 'T') return false;
  ++pos;
  int hh = 0, mm = 0, ss = 0;
  if (!read_fixed(s, pos, 2, hh) || hh > 23) return false;
  if (pos >= s.size() || s[pos++] != ':') return false;
  if (!read_fixed(s, pos, 2, mm) || mm > 59) return false;
  if (pos >= s.size() || s[pos++] != ':') return false;
  if (!read_fixed(s, pos, 2, ss) || ss > 59) return false;
  return pos == s.size();
}

bool is_number_literal(std::string_view s) {
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  std::size_t int_start = pos;
  pos = skip_digits(s, pos);
  bool int_digits = pos > int_start;
  bool frac_digits = false;
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    std::size_t frac_start = pos;
    pos = skip_digits(s, pos);
    frac_digits = pos > frac_start;
  }
  if (!int_digits && !frac_digits) return false;
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    std::size_t exp_start = pos;
    pos = skip_digits(s, pos);
    if (pos == exp_start) return false;
  }
  return pos == s.size();
}

}  // namespace onegraph
