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

#include <string>
#include <string_view>

namespace onegraph {

// True iff `bytes` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view bytes);

// Canonical form of an object text: Unicode NFC, then ASCII whitespace
// (space, \t, \n, \v, \f, \r) trimmed from both ends. Interior bytes are
// preserved. Throws Error(kInvalidUtf8) on malformed input.
std::string normalize_text(std::string_view raw);

std::string_view trim_ascii_whitespace(std::string_view s);

// Number of codepoints; input must be valid UTF-8.
std::size_t utf8_length(std::string_view s);

}  // namespace onegraph
