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

#include "onegraph/error.hpp"

namespace onegraph {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kInvalidUtf8: return "Utf8Error";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kConflictingLabel: return "ConflictingLabel";
    case ErrorCode::kFieldCount: return "FieldCountError";
    case ErrorCode::kEmptyField: return "EmptyFieldError";
    case ErrorCode::kBadEscape: return "BadEscapeError";
    case ErrorCode::kCorruptSnapshot: return "CorruptSnapshot";
    case ErrorCode::kCorruptLog: return "CorruptLog";
    case ErrorCode::kAmbiguousAbstract: return "AmbiguousAbstract";
    case ErrorCode::kNonAbstractTarget: return "NonAbstractTarget";
    case ErrorCode::kChainedAbstract: return "ChainedAbstract";
    case ErrorCode::kBaseNotAsserted: return "BaseNotAsserted";
    case ErrorCode::kEventNameCollision: return "EventNameCollision";
    case ErrorCode::kUnboundProjection: return "UnboundProjection";
    case ErrorCode::kQuerySyntax: return "QuerySyntaxError";
    case ErrorCode::kStaleBinding: return "StaleBinding";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kStoreLocked: return "StoreLocked";
  }
  return "Unknown";
}

}  // namespace onegraph
