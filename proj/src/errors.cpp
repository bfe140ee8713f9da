// Copyright 2026 The qdiv Authors
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

#include "qdiv/errors.hpp"

namespace qdiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGate:
      return "InvalidGate";
    case ErrorCode::OperandOutOfRange:
      return "OperandOutOfRange";
    case ErrorCode::LevelViolation:
      return "LevelViolation";
    case ErrorCode::UnexportableGate:
      return "UnexportableGate";
    case ErrorCode::WrongKind:
      return "WrongKind";
    case ErrorCode::InvalidDirection:
      return "InvalidDirection";
    case ErrorCode::BadWidth:
      return "BadWidth";
    case ErrorCode::OverlappingRegisters:
      return "OverlappingRegisters";
    case ErrorCode::CtrlOverlap:
      return "CtrlOverlap";
    case ErrorCode::LayoutExhausted:
      return "LayoutExhausted";
    case ErrorCode::NonPermutationGate:
      return "NonPermutationGate";
    case ErrorCode::WidthLimitExceeded:
      return "WidthLimitExceeded";
    case ErrorCode::WidthMismatch:
      return "WidthMismatch";
    case ErrorCode::DivisionByZero:
      return "DivisionByZero";
    case ErrorCode::DomainViolation:
      return "DomainViolation";
  }
  return "Unknown";
}

}  // namespace qdiv
