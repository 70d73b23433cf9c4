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

#include <string_view>

namespace onegraph {

// Accepted Time literals:
//   YYYY            bare year, e.g. 1879
//   YYYY-MM
//   YYYY-MM-DD
//   YYYY-MM-DDThh:mm:ss
//   YYYY.MM.DD      dotted date, e.g. 2022.11.30
// Dates must exist in the proleptic Gregorian calendar.
bool is_time_literal(std::string_view text);

// Accepted Number literals: [+-]? (digits ('.' digits?)? | '.' digits)
// ([eE] [+-]? digits)?
bool is_number_literal(std::string_view text);

}  // namespace onegraph
