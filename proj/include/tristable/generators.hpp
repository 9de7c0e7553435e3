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

// Instance families: the n = 2 gadget with no stable marriage, the
// block-structured adversarial preferences, seeded random instances, the
// 3DM-3 -> 3GSM embedding with its witness marriages, and the 3GSM -> 3PSA
// lift. Every unconstrained region of a preference list ("any order") is
// filled in increasing pair-index order.

#ifndef TRISTABLE_GENERATORS_HPP
#define TRISTABLE_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tristable/core.hpp"
#include "tristable/random.hpp"

namespace tristable {

namespace detail {

/// Accumulates a preference list block by block, skipping pairs already listed.
class ListBuilder {
 public:
  explicit ListBuilder(int n) : n_(n), used_(static_cast<std::size_t>(n) * n, false) {}

  ListBuilder& add(int first, int second) {
    const int pair = first * n_ + second;
    if (!used_[pair]) {
      used_[pair] = true;
      list_.push_back(pair);
    }
    return *this;
  }

  /// All pairs of firsts x seconds, in increasing pair index.
  ListBuilder& add_block(const std::vector<int>& firsts, const std::vector<int>& seconds) {
    for (int f : firsts) {
      for (int s : seconds) add(f, s);
    }
    return *this;
  }

  std::vector<int> finish() {
    for (int pair = 0; pair < n_ * n_; ++pair) {
      if (!used_[pair]) list_.push_back(pair);
    }
    return std::move(list_);
  }

 private:
  int n_;
  std::vector<bool> used_;
  std::vector<int> list_;
};

inline std::vector<int> range(int begin, int end) {
  std::vector<int> r(end - begin);
  std::iota(r.begin(), r.end(), begin);
  return r;
}

}  // namespace detail

/// The n = 2 instance in which every marriage has an unstable triple.
inline GsmInstance gen_gadget2() {
  using detail::ListBuilder;
  // Indices: a1 = 0, a2 = 1; likewise for men and dogs.
  std::array<GsmInstance::RankTable, 3> lists;
  auto& women = lists[0];
  auto& men = lists[1];
  auto& dogs = lists[2];
  women.push_back(ListBuilder(2).add(0, 0).add(1, 1).finish());  // a1: b1d1 b2d2
  women.push_back(ListBuilder(2).add(1, 0).finish());            // a2: b2d1
  men.push_back(ListBuilder(2).add(0, 0).finish());              // b1: a1d1
  men.push_back(ListBuilder(2).add(0, 1).add(1, 0).finish());    // b2: a1d2 a2d1
  dogs.push_back(ListBuilder(2).add(1, 1).add(0, 0).finish());   // d1: a2b2 a1b1
  dogs.push_back(ListBuilder(2).add(0, 1).finish());             // d2: a1b2
  return GsmInstance::from_preference_lists(2, lists);
}

/// Block-structured preferences whose every marriage has >= n^3/128 unstable triples.
inline GsmInstance gen_adversarial(int n) {
  using detail::ListBuilder;
  using detail::range;
  if (n < 2 || n % 2 != 0) fail(ErrorKind::OddN, "adversarial preferences need even n >= 2, got " + std::to_string(n));
  const int h = n / 2;
  const auto lo = range(0, h);
  const auto hi = range(h, n);
  std::array<GsmInstance::RankTable, 3> lists;
  for (int a = 0; a < n; ++a) {
    ListBuilder list(n);
    if (a < h) {
      list.add_block(lo, lo).add_block(hi, hi);  // B1D1, B2D2
    } else {
      list.add_block(hi, lo);  // B2D1
    }
    lists[0].push_back(list.finish());
  }
  for (int b = 0; b < n; ++b) {
    ListBuilder list(n);
    if (b < h) {
      list.add_block(lo, lo);  // A1D1
    } else {
      list.add_block(lo, hi).add_block(hi, lo);  // A1D2, A2D1
    }
    lists[1].push_back(list.finish());
  }
  for (int d = 0; d < n; ++d) {
    ListBuilder list(n);
    if (d < h) {
      list.add_block(hi, hi).add_block(lo, lo);  // A2B2, A1B1
    } else {
      list.add_block(lo, hi);  // A1B2
    }
    lists[2].push_back(list.finish());
  }
  return GsmInstance::from_preference_lists(n, lists);
}

/// Each preference list is an independent uniform permutation of the n^2 pairs.
inline GsmInstance gen_random(int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorKind::DimensionMismatch, "n must be positive");
  RandomStream rng(seed);
  std::array<GsmInstance::RankTable, 3> lists;
  for (auto& table : lists) {
    for (int p = 0; p < n; ++p) table.push_back(rng.permutation(n * n));
  }
  return GsmInstance::from_preference_lists(n, lists);
}

/// 3PSA instance with player_count = 3n players and uniform preference lists.
inline PsaInstance gen_random_psa(int player_count, std::uint64_t seed) {
  if (player_count < 3 || player_count % 3 != 0) {
    fail(ErrorKind::PlayerCountNotMultipleOf3, std::to_string(player_count) + " players");
  }
  RandomStream rng(seed);
  const int pairs = static_cast<int>(choose(player_count - 1, 2));
  PsaInstance::RankTable lists;
  for (int u = 0; u < player_count; ++u) lists.push_back(rng.permutation(pairs));
  return PsaInstance::from_preference_lists(player_count, lists);
}

/// Random 3DM-3 instance containing the perfect matching {(i, pi1(i), pi2(i))}
/// plus up to extra_edges further random edges that keep every degree <= 3.
inline DmInstance gen_random_3dm_planted(int m, int extra_edges, std::uint64_t seed) {
  if (m < 1) fail(ErrorKind::DimensionMismatch, "m must be positive");
  RandomStream rng(seed);
  const auto pi1 = rng.permutation(m);
  const auto pi2 = rng.permutation(m);
  std::vector<DmEdge> edges;
  std::array<std::vector<int>, 3> degree;
  for (auto& d : degree) d.assign(m, 0);
  auto push = [&](DmEdge e) {
    edges.push_back(e);
    ++degree[0][e.w];
    ++degree[1][e.x];
    ++degree[2][e.y];
  };
  for (int i = 0; i < m; ++i) push({i, pi1[i], pi2[i]});
  for (int attempt = 0; attempt < extra_edges; ++attempt) {
    const DmEdge e{static_cast<int>(rng.below(m)), static_cast<int>(rng.below(m)), static_cast<int>(rng.below(m))};
    if (degree[0][e.w] < 3 && degree[1][e.x] < 3 && degree[2][e.y] < 3) push(e);
  }
  // Shuffle so the planted matching is not simply the first m edges.
  rng.shuffle(edges);
  return DmInstance::create(m, std::move(edges), true);
}

/// Player numbering of the embedded 3GSM instance, plus the degree padding.
///
/// With M = 3m: woman a_i^j[t] is j*M + 3i + t; man b_i^j, w_i^j, y_i^j are
/// j*M + i, j*M + m + i, j*M + 2m + i; dog d_i^j, x_i^j, z_i^j are numbered the
/// same way. Here j in {0, 1} is the copy, i indexes W (or X, Y) and t in
/// {0, 1, 2} is the slot of the i-th W element's incident edge.
struct EmbeddingLayout {
  int m = 0;
  /// padded[i][t]: index into E of the t-th edge at W element i.
  std::vector<std::array<int, 3>> padded;

  int n() const { return 6 * m; }
  int block() const { return 3 * m; }
  int woman(int copy, int i, int slot) const { return copy * block() + 3 * i + slot; }
  int b(int copy, int i) const { return copy * block() + i; }
  int w(int copy, int i) const { return copy * block() + m + i; }
  int y(int copy, int i) const { return copy * block() + 2 * m + i; }
  int d(int copy, int i) const { return copy * block() + i; }
  int x(int copy, int i) const { return copy * block() + m + i; }
  int z(int copy, int i) const { return copy * block() + 2 * m + i; }
};

struct Embedding {
  GsmInstance instance;
  EmbeddingLayout layout;
};

/// Pads every W element to exactly three incident edges by repeating its last edge.
inline EmbeddingLayout pad_degree3(const DmInstance& dm) {
  EmbeddingLayout layout;
  layout.m = dm.m();
  std::vector<std::vector<int>> incident(dm.m());
  for (std::size_t e = 0; e < dm.edge_count(); ++e) incident[dm.edges()[e].w].push_back(static_cast<int>(e));
  for (int i = 0; i < dm.m(); ++i) {
    const auto& inc = incident[i];
    if (inc.empty() || inc.size() > 3) {
      fail(ErrorKind::NotDegree3Padded,
           "W element " + std::to_string(i + 1) + " lies in " + std::to_string(inc.size()) + " edges");
    }
    std::array<int, 3> slots{};
    for (int t = 0; t < 3; ++t) slots[t] = inc[std::min<std::size_t>(t, inc.size() - 1)];
    layout.padded.push_back(slots);
  }
  return layout;
}

inline Embedding embed_3dm(const DmInstance& dm) {
  using detail::ListBuilder;
  using detail::range;
  if (dm.m() < 1) fail(ErrorKind::DimensionMismatch, "embedding needs m >= 1");
  if (dm.max_degree() > 3) fail(ErrorKind::NotDegree3Padded, "instance is not 3DM-3");
  EmbeddingLayout L = pad_degree3(dm);
  const int m = L.m;
  const int n = L.n();
  const auto copy0 = range(0, L.block());
  const auto copy1 = range(L.block(), n);
  const auto& E = dm.edges();

  std::array<GsmInstance::RankTable, 3> lists;
  for (auto& t : lists) t.resize(n);

  // Women: (man, dog) pairs.
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < m; ++i) {
      for (int t = 0; t < 3; ++t) {
        const DmEdge& e = E[L.padded[i][t]];
        ListBuilder list(n);
        list.add(L.w(j, i), L.x(j, i)).add(L.y(j, i), L.z(j, i)).add(L.b(j, e.x), L.d(j, e.y));
        if (j == 0) {
          list.add_block(copy0, copy0).add_block(copy1, copy1);  // B1D1, B2D2
        } else {
          list.add_block(copy1, copy0);  // B2D1
        }
        lists[0][L.woman(j, i, t)] = list.finish();
      }
    }
  }
  // Men: (woman, dog) pairs.
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < m; ++i) {
      for (const bool is_w : {true, false}) {
        ListBuilder list(n);
        const int dog = is_w ? L.x(j, i) : L.z(j, i);
        for (int t = 0; t < 3; ++t) list.add(L.woman(j, i, t), dog);
        if (j == 0) {
          list.add_block(copy0, copy0);  // A1D1
        } else {
          list.add_block(copy0, copy1).add_block(copy1, copy0);  // A1D2, A2D1
        }
        lists[1][is_w ? L.w(j, i) : L.y(j, i)] = list.finish();
      }
      ListBuilder list(n);
      if (j == 0) {
        list.add_block(copy0, copy0);
      } else {
        list.add_block(copy0, copy1).add_block(copy1, copy0);
      }
      lists[1][L.b(j, i)] = list.finish();
    }
  }
  // Dogs: (woman, man) pairs; x and z rank the three slots in descending order.
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < m; ++i) {
      for (const bool is_x : {true, false}) {
        ListBuilder list(n);
        const int man = is_x ? L.w(j, i) : L.y(j, i);
        for (int t = 2; t >= 0; --t) list.add(L.woman(j, i, t), man);
        if (j == 0) {
          list.add_block(copy1, copy1).add_block(copy0, copy0);  // A2B2, A1B1
        } else {
          list.add_block(copy0, copy1);  // A1B2
        }
        lists[2][is_x ? L.x(j, i) : L.z(j, i)] = list.finish();
      }
      ListBuilder list(n);
      if (j == 0) {
        list.add_block(copy1, copy1).add_block(copy0, copy0);
      } else {
        list.add_block(copy0, copy1);
      }
      lists[2][L.d(j, i)] = list.finish();
    }
  }
  return {GsmInstance::from_preference_lists(n, lists), std::move(L)};
}

/// The stable marriage built from a perfect matching of the embedded 3DM instance.
/// The matched edge's slot marries into (b, d); the lower of the two remaining
/// slots takes (w, x) and the higher takes (y, z).
inline Marriage witness_marriage(const DmInstance& dm, const EmbeddingLayout& L, std::span<const int> matching) {
  const int m = L.m;
  if (static_cast<int>(matching.size()) != m || !dm.is_matching(matching)) {
    fail(ErrorKind::NotAPerfectMatching, "witness needs a perfect matching of size m");
  }
  const int n = L.n();
  std::vector<int> sigma(n, -1), tau(n, -1);
  for (int e : matching) {
    const DmEdge& edge = dm.edges()[e];
    const int i = edge.w;
    int slot = -1;
    for (int t = 0; t < 3 && slot < 0; ++t) {
      if (L.padded[i][t] == e) slot = t;
    }
    std::array<int, 2> rest{};
    for (int t = 0, r = 0; t < 3; ++t) {
      if (t != slot) rest[r++] = t;
    }
    for (int j = 0; j < 2; ++j) {
      sigma[L.woman(j, i, slot)] = L.b(j, edge.x);
      tau[L.woman(j, i, slot)] = L.d(j, edge.y);
      sigma[L.woman(j, i, rest[0])] = L.w(j, i);
      tau[L.woman(j, i, rest[0])] = L.x(j, i);
      sigma[L.woman(j, i, rest[1])] = L.y(j, i);
      tau[L.woman(j, i, rest[1])] = L.z(j, i);
    }
  }
  return Marriage::from_permutations(std::move(sigma), std::move(tau));
}

/// Global 3PSA player id of a 3GSM player: women, then men, then dogs.
inline int lifted_player(int n, Gender g, int player) { return index_of(g) * n + player; }

/// 3PSA instance over the 3n players: each player's cross-gender pairs keep their
/// 3GSM order at the top, every other pair follows in increasing pair index.
inline PsaInstance lift_gsm_to_psa(const GsmInstance& inst) {
  const int n = inst.size();
  const int players = 3 * n;
  const int pairs = static_cast<int>(choose(players - 1, 2));
  PsaInstance::RankTable lists;
  for (Gender g : kGenders) {
    const Gender g1 = g == Gender::Woman ? Gender::Man : Gender::Woman;
    const Gender g2 = g == Gender::Dog ? Gender::Man : Gender::Dog;
    for (int p = 0; p < n; ++p) {
      const int u = lifted_player(n, g, p);
      std::vector<bool> used(pairs, false);
      std::vector<int> list;
      for (int pair : inst.preference_list(g, p)) {
        const auto [p1, p2] = inst.pair_at(pair);
        const int idx = PsaInstance::pair_index_in(players, u, lifted_player(n, g1, p1), lifted_player(n, g2, p2));
        used[idx] = true;
        list.push_back(idx);
      }
      for (int idx = 0; idx < pairs; ++idx) {
        if (!used[idx]) list.push_back(idx);
      }
      lists.push_back(std::move(list));
    }
  }
  return PsaInstance::from_preference_lists(players, lists);
}

/// The 3PSA matching corresponding to a 3GSM submarriage under the lift.
inline Submatching lift_submarriage(const Submarriage& s) {
  const int n = s.size();
  std::vector<Triple> triples;
  for (const Family& f : s.families()) {
    triples.push_back(Triple::of(lifted_player(n, Gender::Woman, f.woman), lifted_player(n, Gender::Man, f.man),
                                 lifted_player(n, Gender::Dog, f.dog)));
  }
  return Submatching::from_triples(3 * n, std::move(triples));
}

}  // namespace tristable

#endif  // TRISTABLE_GENERATORS_HPP
