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

// Greedy 4/9-approximations for maximally stable marriage (AMSM) and
// maximally stable 3PSA matching (ASA).
//
// The stable set of a family (i, j, k) is the set of triples sharing a member
// with it whose shared member weakly disprefers them to the family; once the
// family is fixed none of those triples can block. Each greedy step fixes a
// family with the largest stable set among the players still unassigned,
// ties going to the lexicographically smallest triple.

#ifndef TRISTABLE_APPROX_HPP
#define TRISTABLE_APPROX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "tristable/core.hpp"
#include "tristable/stability.hpp"

namespace tristable {

struct StableSetStats {
  Family triple;
  std::uint64_t stable_set_size = 0;
};

struct PsaStableSetStats {
  Triple triple;
  std::uint64_t stable_set_size = 0;
};

/// floor(a / b) for b > 0.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

/// Guaranteed stable-set size of the best family with k players per gender left:
/// ceil(4k^2/3 - k - 1).
constexpr std::int64_t amsm_step_lower_bound(std::int64_t k) { return ceil_div(4 * k * k - 3 * k - 3, 3); }

/// 18 * sum_{k=1..n} (5k^2/3 + k + 1) = 5n(n+1)(2n+1) + 9n(n+3).
constexpr std::int64_t amsm_ins_bound_times18(std::int64_t n) { return 5 * n * (n + 1) * (2 * n + 1) + 9 * n * (n + 3); }

/// Largest integer ins allowed by the closed-form AMSM guarantee.
constexpr std::int64_t amsm_ins_bound(std::int64_t n) { return amsm_ins_bound_times18(n) / 18; }

/// Stable-set sizes over the players still in play. Pair positions are
/// re-ranked among surviving pairs, which is exactly the restricted instance.
class GsmStableSets {
 public:
  GsmStableSets(const GsmInstance& inst, const std::array<std::vector<int>, 3>& active)
      : inst_(inst), active_(active), k_(static_cast<int>(active[0].size())) {
    const int n = inst.size();
    std::array<std::vector<bool>, 3> alive;
    for (Gender g : kGenders) {
      alive[index_of(g)].assign(n, false);
      for (int v : active[index_of(g)]) alive[index_of(g)][v] = true;
    }
    for (Gender g : kGenders) {
      const int gi = index_of(g);
      const auto& first_alive = alive[gi == 0 ? 1 : 0];
      const auto& second_alive = alive[gi == 2 ? 1 : 2];
      pos_[gi].assign(static_cast<std::size_t>(n) * n * n, -1);
      for (int v : active[gi]) {
        int next = 0;
        int* row = &pos_[gi][static_cast<std::size_t>(v) * n * n];
        for (int pair : inst.preference_list(g, v)) {
          const auto [p1, p2] = inst.pair_at(pair);
          if (first_alive[p1] && second_alive[p2]) row[pair] = next++;
        }
      }
    }
  }

  /// Position (0 = best) of a pair among surviving pairs for player v.
  int position(Gender g, int v, int pair) const {
    const int n = inst_.size();
    return pos_[index_of(g)][static_cast<std::size_t>(v) * n * n + pair];
  }

  std::uint64_t size(int i, int j, int k) const {
    const int n = inst_.size();
    const std::int64_t k2 = static_cast<std::int64_t>(k_) * k_;
    const int pa = position(Gender::Woman, i, j * n + k);
    const int pb = position(Gender::Man, j, i * n + k);
    const int pd = position(Gender::Dog, k, i * n + j);
    std::int64_t total = (k2 - pa) + (k2 - pb) + (k2 - pd) + 1;
    for (int delta : active_[2]) {
      if (position(Gender::Woman, i, j * n + delta) >= pa && position(Gender::Man, j, i * n + delta) >= pb) --total;
    }
    for (int beta : active_[1]) {
      if (position(Gender::Woman, i, beta * n + k) >= pa && position(Gender::Dog, k, i * n + beta) >= pd) --total;
    }
    for (int alpha : active_[0]) {
      if (position(Gender::Man, j, alpha * n + k) >= pb && position(Gender::Dog, k, alpha * n + j) >= pd) --total;
    }
    return static_cast<std::uint64_t>(total);
  }

  /// Lexicographically smallest maximizer over the active triples.
  StableSetStats best() const {
    StableSetStats out{{active_[0][0], active_[1][0], active_[2][0]}, 0};
    bool first = true;
    for (int i : active_[0]) {
      for (int j : active_[1]) {
        for (int k : active_[2]) {
          const std::uint64_t s = size(i, j, k);
          if (first || s > out.stable_set_size) {
            out = {{i, j, k}, s};
            first = false;
          }
        }
      }
    }
    return out;
  }

 private:
  const GsmInstance& inst_;
  std::array<std::vector<int>, 3> active_;
  int k_;
  std::array<std::vector<int>, 3> pos_;
};

inline StableSetStats stable_set_size(const GsmInstance& inst, const Family& t) {
  const int n = inst.size();
  for (Gender g : kGenders) {
    const int v = t.member(g);
    if (v < 0 || v >= n) fail(ErrorKind::IndexOutOfRange, std::string(to_string(g)) + " " + std::to_string(v));
  }
  std::array<std::vector<int>, 3> all;
  for (auto& a : all) {
    a.resize(n);
    std::iota(a.begin(), a.end(), 0);
  }
  return {t, GsmStableSets(inst, all).size(t.woman, t.man, t.dog)};
}

struct AmsmStep {
  int remaining = 0;  // players per gender before this step
  Family family;
  std::uint64_t stable_set_size = 0;
};

struct AmsmResult {
  Marriage marriage;
  StabilityReport report;
  std::vector<AmsmStep> steps;
};

inline AmsmResult amsm(const GsmInstance& inst, bool list_unstable = false) {
  const int n = inst.size();
  std::array<std::vector<int>, 3> active;
  for (auto& a : active) {
    a.resize(n);
    std::iota(a.begin(), a.end(), 0);
  }
  std::vector<int> sigma(n), tau(n);
  std::vector<AmsmStep> steps;
  for (int remaining = n; remaining > 0; --remaining) {
    const StableSetStats pick = GsmStableSets(inst, active).best();
    steps.push_back({remaining, pick.triple, pick.stable_set_size});
    sigma[pick.triple.woman] = pick.triple.man;
    tau[pick.triple.woman] = pick.triple.dog;
    for (Gender g : kGenders) std::erase(active[index_of(g)], pick.triple.member(g));
  }
  Marriage m = Marriage::from_permutations(std::move(sigma), std::move(tau));
  StabilityReport report = stability_report_gsm(inst, m, list_unstable);
  return {std::move(m), std::move(report), std::move(steps)};
}

// --- 3PSA ---------------------------------------------------------------

/// Per-step stable-set guarantee with `players` players left. Each player marks
/// its top floor(P/3) + 1 pairs (P = C(players-1, 2)); marks outnumber the
/// C(players, 3) = players * P / 3 triples, so some triple is marked by two
/// members x, y. Each contributes P - floor(P/3) triples and they share at most
/// players - 2.
constexpr std::int64_t asa_step_lower_bound(std::int64_t players) {
  const auto p = static_cast<std::int64_t>(choose(players - 1, 2));
  return 2 * (p - p / 3) - (players - 2);
}

/// Triples meeting a fixed triple, minus the guaranteed stable set.
constexpr std::int64_t asa_step_blocking_bound(std::int64_t players) {
  const auto meeting = static_cast<std::int64_t>(choose(players, 3) - choose(players - 3, 3));
  return meeting - asa_step_lower_bound(players);
}

constexpr std::int64_t asa_ins_bound(std::int64_t n) {
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= n; ++k) total += asa_step_blocking_bound(3 * k);
  return total;
}

constexpr std::int64_t asa_stab_lower_bound(std::int64_t n) {
  return static_cast<std::int64_t>(choose(3 * n, 3)) - asa_ins_bound(n);
}

/// c0 in stab(ASA) >= 2n^3 - c0 n^2; asa_stab_lower_bound(n) = 2n^3 - 3n^2/2 + O(n).
inline constexpr std::int64_t kAsaQuadraticSlack = 2;

class PsaStableSets {
 public:
  PsaStableSets(const PsaInstance& inst, const std::vector<int>& active) : inst_(inst), active_(active) {
    const int players = inst.player_count();
    std::vector<bool> alive(players, false);
    for (int u : active) alive[u] = true;
    pos_.assign(static_cast<std::size_t>(players) * inst.pair_count(), -1);
    for (int u : active) {
      int next = 0;
      int* row = &pos_[static_cast<std::size_t>(u) * inst.pair_count()];
      for (int pair : inst.preference_list(u)) {
        const auto [x, y] = inst.pair_at(u, pair);
        if (alive[x] && alive[y]) row[pair] = next++;
      }
    }
    active_pairs_ = static_cast<std::int64_t>(choose(static_cast<std::int64_t>(active.size()) - 1, 2));
  }

  int position(int u, int x, int y) const {
    return pos_[static_cast<std::size_t>(u) * inst_.pair_count() + inst_.pair_index(u, x, y)];
  }

  std::uint64_t size(const Triple& t) const {
    const auto [a, b, c] = t.members;
    const int pa = position(a, b, c);
    const int pb = position(b, a, c);
    const int pc = position(c, a, b);
    std::int64_t total = 3 * active_pairs_ - pa - pb - pc + 1;
    for (int w : active_) {
      if (w != a && w != b && position(a, b, w) >= pa && position(b, a, w) >= pb) --total;
      if (w != a && w != c && position(a, c, w) >= pa && position(c, a, w) >= pc) --total;
      if (w != b && w != c && position(b, c, w) >= pb && position(c, b, w) >= pc) --total;
    }
    return static_cast<std::uint64_t>(total);
  }

  PsaStableSetStats best() const {
    PsaStableSetStats out{Triple::of(active_[0], active_[1], active_[2]), 0};
    bool first = true;
    const std::size_t k = active_.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        for (std::size_t l = j + 1; l < k; ++l) {
          const Triple t{{active_[i], active_[j], active_[l]}};
          const std::uint64_t s = size(t);
          if (first || s > out.stable_set_size) {
            out = {t, s};
            first = false;
          }
        }
      }
    }
    return out;
  }

 private:
  const PsaInstance& inst_;
  std::vector<int> active_;  // sorted
  std::vector<int> pos_;
  std::int64_t active_pairs_ = 0;
};

inline PsaStableSetStats stable_set_size_psa(const PsaInstance& inst, const Triple& t) {
  for (int u : t.members) {
    if (u < 0 || u >= inst.player_count()) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(u));
  }
  std::vector<int> all(inst.player_count());
  std::iota(all.begin(), all.end(), 0);
  const Triple sorted = Triple::of(t.members[0], t.members[1], t.members[2]);
  return {sorted, PsaStableSets(inst, all).size(sorted)};
}

struct AsaStep {
  int remaining = 0;  // players left before this step
  Triple triple;
  std::uint64_t stable_set_size = 0;
};

struct AsaResult {
  Submatching matching;
  StabilityReport report;
  std::vector<AsaStep> steps;
};

inline AsaResult asa(const PsaInstance& inst, bool list_unstable = false) {
  std::vector<int> active(inst.player_count());
  std::iota(active.begin(), active.end(), 0);
  std::vector<Triple> triples;
  std::vector<AsaStep> steps;
  while (!active.empty()) {
    const PsaStableSetStats pick = PsaStableSets(inst, active).best();
    steps.push_back({static_cast<int>(active.size()), pick.triple, pick.stable_set_size});
    triples.push_back(pick.triple);
    for (int u : pick.triple.members) std::erase(active, u);
  }
  Submatching matching = Submatching::from_triples(inst.player_count(), std::move(triples));
  StabilityReport report = stability_report_psa(inst, matching, list_unstable);
  return {std::move(matching), std::move(report), std::move(steps)};
}

}  // namespace tristable

#endif  // TRISTABLE_APPROX_HPP
