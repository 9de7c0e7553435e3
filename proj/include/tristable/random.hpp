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

#ifndef TRISTABLE_RANDOM_HPP
#define TRISTABLE_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace tristable {

/// Portable seeded stream. std::mt19937_64 output is fixed by the standard;
/// the distributions below are written out because the std:: ones are not.
/// Bump kVersion whenever the derived sequences change.
class RandomStream {
 public:
  static constexpr std::string_view kName = "mt19937_64/rejection/fisher-yates";
  static constexpr int kVersion = 1;

  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<int> permutation(int size) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    shuffle(p);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tristable

#endif  // TRISTABLE_RANDOM_HPP
