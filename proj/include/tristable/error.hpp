// Copyright 2026 The tristable Authors.
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

#ifndef TRISTABLE_ERROR_HPP
#define TRISTABLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tristable {

enum class ErrorKind {
  DuplicateRank,
  DimensionMismatch,
  IndexOutOfRange,
  NotAPermutation,
  PlayerCountNotMultipleOf3,
  OverlappingFamilies,
  UncoveredPlayer,
  InstanceTooLarge,
  Timeout,
  NotDegree3Padded,
  DegreeBoundViolated,
  OddN,
  EmptyClause,
  OccurrenceBoundViolated,
  NonCanonicalMatching,
  NotAPerfectMatching,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateRank: return "DuplicateRank";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::PlayerCountNotMultipleOf3: return "PlayerCountNotMultipleOf3";
    case ErrorKind::OverlappingFamilies: return "OverlappingFamilies";
    case ErrorKind::UncoveredPlayer: return "UncoveredPlayer";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::NotDegree3Padded: return "NotDegree3Padded";
    case ErrorKind::DegreeBoundViolated: return "DegreeBoundViolated";
    case ErrorKind::OddN: return "OddN";
    case ErrorKind::EmptyClause: return "EmptyClause";
    case ErrorKind::OccurrenceBoundViolated: return "OccurrenceBoundViolated";
    case ErrorKind::NonCanonicalMatching: return "NonCanonicalMatching";
    case ErrorKind::NotAPerfectMatching: return "NotAPerfectMatching";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tristable

#endif  // TRISTABLE_ERROR_HPP
