// Copyright 2026 The latnorm Authors
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

#ifndef LATNORM_ERROR_HPP
#define LATNORM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latnorm {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  CycleDetected,
  NotALattice,
  NoBottom,
  NoTop,
  BoundExceeded,
  LatticeMismatch,
  NotClosed,
  TopMissing,
  NotAtomistic,
  NonAtomInAlpha,
  ConditionCViolated,
  NotATNorm,
  ParseError,
  InvalidArgument,
  Internal,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::TopMissing: return "TopMissing";
    case ErrorKind::NotAtomistic: return "NotAtomistic";
    case ErrorKind::NonAtomInAlpha: return "NonAtomInAlpha";
    case ErrorKind::ConditionCViolated: return "ConditionCViolated";
    case ErrorKind::NotATNorm: return "NotATNorm";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness()` holds element labels
/// that pin the failure down (a pair lacking a meet, a cell leaving a
/// sub-poset, ...), in an order documented at each throw site.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace latnorm

#endif  // LATNORM_ERROR_HPP
