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

// Blocking-triple detection and stab/ins counting.
//
// A triple blocks when each of its members strictly prefers it to the family
// (or 3PSA triple) they currently hold. Only covered players are part of the
// universe: for a submarriage S that is A_S x B_S x D_S, for a submatching the
// 3-subsets of covered players.

#ifndef TRISTABLE_STABILITY_HPP
#define TRISTABLE_STABILITY_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tristable/core.hpp"

namespace tristable {

namespace detail {

/// Ranks of each player's current pair; unmatched players get pair_count().
inline std::array<std::vector<int>, 3> current_ranks(const GsmInstance& inst, const Submarriage& s) {
  std::array<std::vector<int>, 3> cur;
  for (auto& c : cur) c.assign(inst.size(), inst.pair_count());
  for (const Family& f : s.families()) {
    for (Gender g : kGenders) cur[index_of(g)][f.member(g)] = inst.rank_in(g, f);
  }
  return cur;
}

}  // namespace detail

inline bool is_unstable_triple_gsm(const GsmInstance& inst, const Submarriage& s, const Family& t) {
  if (s.size() != inst.size()) fail(ErrorKind::DimensionMismatch, "submarriage size differs from instance");
  for (Gender g : kGenders) {
    const int v = t.member(g);
    if (v < 0 || v >= inst.size()) fail(ErrorKind::IndexOutOfRange, std::string(to_string(g)) + " " + std::to_string(v));
    if (!s.covers(g, v)) {
      fail(ErrorKind::UncoveredPlayer, std::string(to_string(g)) + " " + std::to_string(v) + " has no family");
    }
  }
  for (Gender g : kGenders) {
    const Family held = *s.family_of(g, t.member(g));
    if (inst.rank_in(g, t) >= inst.rank_in(g, held)) return false;
  }
  return true;
}

/// Unstable-triple count of a perfect marriage given as (sigma, tau).
inline std::uint64_t count_unstable_marriage(const GsmInstance& inst, std::span<const int> sigma,
                                             std::span<const int> tau) {
  const int n = inst.size();
  std::vector<int> cur_a(n), cur_b(n), cur_d(n);
  for (int a = 0; a < n; ++a) {
    const Family f{a, sigma[a], tau[a]};
    cur_a[a] = inst.rank_in(Gender::Woman, f);
    cur_b[f.man] = inst.rank_in(Gender::Man, f);
    cur_d[f.dog] = inst.rank_in(Gender::Dog, f);
  }
  std::uint64_t ins = 0;
  for (int a = 0; a < n; ++a) {
    const auto row_a = inst.rank_row(Gender::Woman, a);
    for (int b = 0; b < n; ++b) {
      const auto row_b = inst.rank_row(Gender::Man, b);
      const auto row_d_base = a * n + b;
      for (int d = 0; d < n; ++d) {
        if (row_a[b * n + d] < cur_a[a] && row_b[a * n + d] < cur_b[b] &&
            inst.rank(Gender::Dog, d, row_d_base) < cur_d[d]) {
          ++ins;
        }
      }
    }
  }
  return ins;
}

inline StabilityReport stability_report_gsm(const GsmInstance& inst, const Submarriage& s, bool list = false) {
  if (s.size() != inst.size()) fail(ErrorKind::DimensionMismatch, "submarriage size differs from instance");
  const auto cur = detail::current_ranks(inst, s);
  const auto women = s.covered(Gender::Woman);
  const auto men = s.covered(Gender::Man);
  const auto dogs = s.covered(Gender::Dog);

  StabilityReport report;
  if (list) report.unstable.emplace();
  for (int a : women) {
    for (int b : men) {
      for (int d : dogs) {
        const Family t{a, b, d};
        bool blocks = true;
        for (Gender g : kGenders) {
          if (inst.rank_in(g, t) >= cur[index_of(g)][t.member(g)]) {
            blocks = false;
            break;
          }
        }
        if (blocks) {
          ++report.ins;
          if (list) report.unstable->push_back({a, b, d});
        } else {
          ++report.stab;
        }
      }
    }
  }
  return report;
}

inline StabilityReport stability_report_gsm(const GsmInstance& inst, const Marriage& m, bool list = false) {
  return stability_report_gsm(inst, m.as_submarriage(), list);
}

inline bool is_stable_submarriage(const GsmInstance& inst, const Submarriage& s) {
  return stability_report_gsm(inst, s).ins == 0;
}

inline bool is_unstable_triple_psa(const PsaInstance& inst, const Submatching& s, const Triple& t) {
  for (int u : t.members) {
    if (u < 0 || u >= inst.player_count()) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(u));
    if (!s.covers(u)) fail(ErrorKind::UncoveredPlayer, "player " + std::to_string(u) + " has no triple");
  }
  for (int u : t.members) {
    const auto [x, y] = t.others(u);
    const auto [hx, hy] = s.triple_of(u)->others(u);
    if (inst.rank_of(u, x, y) >= inst.rank_of(u, hx, hy)) return false;
  }
  return true;
}

inline StabilityReport stability_report_psa(const PsaInstance& inst, const Submatching& s, bool list = false) {
  if (s.player_count() != inst.player_count()) {
    fail(ErrorKind::DimensionMismatch, "submatching size differs from instance");
  }
  std::vector<int> cur(inst.player_count(), inst.pair_count());
  for (const Triple& t : s.triples()) {
    for (int u : t.members) {
      const auto [x, y] = t.others(u);
      cur[u] = inst.rank_of(u, x, y);
    }
  }
  const auto players = s.covered();
  StabilityReport report;
  if (list) report.unstable.emplace();
  const std::size_t k = players.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int u = players[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      const int v = players[j];
      for (std::size_t l = j + 1; l < k; ++l) {
        const int w = players[l];
        if (inst.rank_of(u, v, w) < cur[u] && inst.rank_of(v, u, w) < cur[v] && inst.rank_of(w, u, v) < cur[w]) {
          ++report.ins;
          if (list) report.unstable->push_back({u, v, w});
        } else {
          ++report.stab;
        }
      }
    }
  }
  return report;
}

inline bool is_stable_submatching(const PsaInstance& inst, const Submatching& s) {
  return stability_report_psa(inst, s).ins == 0;
}

}  // namespace tristable

#endif  // TRISTABLE_STABILITY_HPP
