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

#ifndef TRISTABLE_TESTS_TEST_UTIL_HPP
#define TRISTABLE_TESTS_TEST_UTIL_HPP

#include <array>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tristable/core.hpp"
#include "tristable/error.hpp"

namespace tristable {

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline std::vector<oracle::Fam> as_fams(const Submarriage& s) {
  std::vector<oracle::Fam> out;
  for (const Family& f : s.families()) out.push_back({f.woman, f.man, f.dog});
  return out;
}

inline std::vector<oracle::Tri> as_tris(const Submatching& s) {
  std::vector<oracle::Tri> out;
  for (const Triple& t : s.triples()) out.push_back(t.members);
  return out;
}

inline std::vector<oracle::Fam> sorted_unstable(const StabilityReport& r) {
  std::vector<oracle::Fam> out(r.unstable->begin(), r.unstable->end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tristable

#endif  // TRISTABLE_TESTS_TEST_UTIL_HPP
