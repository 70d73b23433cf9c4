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

#include <iosfwd>
#include <string>
#include <vector>

namespace og {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitContent = 1;  // user or content error
inline constexpr int kExitIo = 2;       // environment or I/O error

// Runs `og` with `args` (args[0] is the program name). Data goes to `out`,
// reports and diagnostics to `err`; `in` is read by `query` when no file is
// given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace og
