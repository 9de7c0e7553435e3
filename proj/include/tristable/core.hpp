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

// Domain types for three-gender stable marriage (3GSM), three-person stable
// assignment (3PSA) and three-dimensional matching (3DM).
//
// Rank convention: rank 0 is the most preferred pair. A 3GSM pair is indexed
// row-major (first partner * n + second partner) where the partners are taken
// in gender order woman < man < dog with the owner's gender removed. A 3PSA
// pair {x, y} of players other than u is indexed lexicographically after
// compressing indices to skip u. The empty assignment is never stored; it is
// worse than every ranked pair.

#ifndef TRISTABLE_CORE_HPP
#define TRISTABLE_CORE_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tristable/error.hpp"

namespace tristable {

enum class Gender : std::uint8_t { Woman = 0, Man = 1, Dog = 2 };

inline constexpr std::array<Gender, 3> kGenders = {Gender::Woman, Gender::Man, Gender::Dog};

constexpr int index_of(Gender g) { return static_cast<int>(g); }

constexpr std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Woman: return "woman";
    case Gender::Man: return "man";
    case Gender::Dog: return "dog";
  }
  return "?";
}

/// Binomial coefficient for small arguments; C(n, k) = 0 when n < k.
constexpr std::uint64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

struct Family {
  int woman = 0;
  int man = 0;
  int dog = 0;

  constexpr int member(Gender g) const {
    switch (g) {
      case Gender::Woman: return woman;
      case Gender::Man: return man;
      case Gender::Dog: return dog;
    }
    return -1;
  }

  friend constexpr auto operator<=>(const Family&, const Family&) = default;
};

class GsmInstance {
 public:
  using RankTable = std::vector<std::vector<int>>;

  /// Validates and adopts three n x n^2 rank tables (women, men, dogs).
  static GsmInstance from_ranks(int n, const std::array<RankTable, 3>& tables) {
    if (n < 1) fail(ErrorKind::DimensionMismatch, "n must be positive");
    const int pairs = n * n;
    GsmInstance inst(n);
    for (Gender g : kGenders) {
      const RankTable& table = tables[index_of(g)];
      if (static_cast<int>(table.size()) != n) {
        fail(ErrorKind::DimensionMismatch,
             std::string(to_string(g)) + " table has " + std::to_string(table.size()) +
                 " rows, expected " + std::to_string(n));
      }
      for (int p = 0; p < n; ++p) {
        const auto& row = table[p];
        if (static_cast<int>(row.size()) != pairs) {
          fail(ErrorKind::DimensionMismatch, std::string(to_string(g)) + " " + std::to_string(p) +
                                                 " ranks " + std::to_string(row.size()) +
                                                 " pairs, expected " + std::to_string(pairs));
        }
        std::vector<bool> seen(pairs, false);
        for (int pair = 0; pair < pairs; ++pair) {
          const int r = row[pair];
          if (r < 0 || r >= pairs) {
            fail(ErrorKind::IndexOutOfRange, "rank " + std::to_string(r) + " outside [0, n^2)");
          }
          if (seen[r]) {
            fail(ErrorKind::DuplicateRank, std::string(to_string(g)) + " " + std::to_string(p) +
                                               " repeats rank " + std::to_string(r));
          }
          seen[r] = true;
          inst.ranks_[inst.offset(g, p) + pair] = r;
        }
      }
    }
    return inst;
  }

  /// Builds from preference lists: row p of table g lists pair indices, most preferred first.
  static GsmInstance from_preference_lists(int n, const std::array<RankTable, 3>& lists) {
    std::array<RankTable, 3> tables;
    for (Gender g : kGenders) {
      const RankTable& src = lists[index_of(g)];
      RankTable& dst = tables[index_of(g)];
      dst.resize(src.size());
      for (std::size_t p = 0; p < src.size(); ++p) {
        dst[p] = invert_list(src[p], n * n);
      }
    }
    return from_ranks(n, tables);
  }

  int size() const { return n_; }
  int pair_count() const { return n_ * n_; }

  /// Pair index of (first, second) partners in gender order, e.g. (man, dog) for a woman.
  int pair_index(int first, int second) const { return first * n_ + second; }
  std::pair<int, int> pair_at(int pair) const { return {pair / n_, pair % n_}; }

  /// The pair a family assigns to its member of gender g.
  int pair_of(Gender g, const Family& f) const {
    switch (g) {
      case Gender::Woman: return pair_index(f.man, f.dog);
      case Gender::Man: return pair_index(f.woman, f.dog);
      case Gender::Dog: return pair_index(f.woman, f.man);
    }
    return -1;
  }

  int rank(Gender g, int player, int pair) const { return ranks_[offset(g, player) + pair]; }

  /// Rank of the family's pair in the eyes of its member of gender g.
  int rank_in(Gender g, const Family& f) const { return rank(g, f.member(g), pair_of(g, f)); }

  std::span<const int> rank_row(Gender g, int player) const {
    return {ranks_.data() + offset(g, player), static_cast<std::size_t>(pair_count())};
  }

  /// Strict preference: player ranks pairX better than pairY.
  bool prefers(Gender g, int player, int pairX, int pairY) const {
    check_player(player);
    check_pair(pairX);
    check_pair(pairY);
    return rank(g, player, pairX) < rank(g, player, pairY);
  }

  std::vector<int> preference_list(Gender g, int player) const {
    std::vector<int> list(pair_count());
    const auto row = rank_row(g, player);
    for (int pair = 0; pair < pair_count(); ++pair) list[row[pair]] = pair;
    return list;
  }

  std::array<RankTable, 3> preference_lists() const {
    std::array<RankTable, 3> out;
    for (Gender g : kGenders) {
      for (int p = 0; p < n_; ++p) out[index_of(g)].push_back(preference_list(g, p));
    }
    return out;
  }

  friend bool operator==(const GsmInstance&, const GsmInstance&) = default;

 private:
  explicit GsmInstance(int n) : n_(n), ranks_(static_cast<std::size_t>(3) * n * n * n) {}

  std::size_t offset(Gender g, int player) const {
    return (static_cast<std::size_t>(index_of(g)) * n_ + player) * pair_count();
  }

  void check_player(int player) const {
    if (player < 0 || player >= n_) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(player));
  }
  void check_pair(int pair) const {
    if (pair < 0 || pair >= pair_count()) fail(ErrorKind::IndexOutOfRange, "pair " + std::to_string(pair));
  }

  static std::vector<int> invert_list(const std::vector<int>& list, int pairs) {
    if (static_cast<int>(list.size()) != pairs) {
      fail(ErrorKind::DimensionMismatch, "list has " + std::to_string(list.size()) + " pairs, expected " +
                                             std::to_string(pairs));
    }
    std::vector<int> ranks(list.size(), pairs);
    std::vector<int> seen(pairs, 0);
    for (std::size_t r = 0; r < list.size(); ++r) {
      const int pair = list[r];
      if (pair < 0 || pair >= pairs) {
        fail(ErrorKind::IndexOutOfRange, "pair " + std::to_string(pair) + " outside [0, n^2)");
      }
      if (seen[pair]++) fail(ErrorKind::DuplicateRank, "pair " + std::to_string(pair) + " listed twice");
      ranks[pair] = static_cast<int>(r);
    }
    return ranks;
  }

  int n_;
  std::vector<int> ranks_;
};

/// A set of pairwise-disjoint families with partner lookup.
class Submarriage {
 public:
  Submarriage() = default;

  static Submarriage from_families(int n, std::vector<Family> families) {
    Submarriage s;
    s.n_ = n;
    for (auto& owner : s.owner_) owner.assign(n, -1);
    std::sort(families.begin(), families.end());
    for (std::size_t i = 0; i < families.size(); ++i) {
      const Family& f = families[i];
      for (Gender g : kGenders) {
        const int v = f.member(g);
        if (v < 0 || v >= n) fail(ErrorKind::IndexOutOfRange, std::string(to_string(g)) + " " + std::to_string(v));
        int& slot = s.owner_[index_of(g)][v];
        if (slot != -1) {
          fail(ErrorKind::OverlappingFamilies, std::string(to_string(g)) + " " + std::to_string(v) + " in two families");
        }
        slot = static_cast<int>(i);
      }
    }
    s.families_ = std::move(families);
    return s;
  }

  int size() const { return n_; }
  std::span<const Family> families() const { return families_; }
  std::size_t family_count() const { return families_.size(); }
  bool is_marriage() const { return static_cast<int>(families_.size()) == n_; }

  bool covers(Gender g, int player) const { return owner_[index_of(g)][player] != -1; }

  /// p_S(v): the family containing v, or nullopt when v is unmatched.
  std::optional<Family> family_of(Gender g, int player) const {
    if (player < 0 || player >= n_) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(player));
    const int idx = owner_[index_of(g)][player];
    if (idx < 0) return std::nullopt;
    return families_[idx];
  }

  std::vector<int> covered(Gender g) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v) {
      if (covers(g, v)) out.push_back(v);
    }
    return out;
  }

  Submarriage without(const Family& f) const {
    std::vector<Family> rest;
    for (const Family& h : families_) {
      if (h != f) rest.push_back(h);
    }
    return from_families(n_, std::move(rest));
  }

  Submarriage with(const Family& f) const {
    std::vector<Family> more(families_.begin(), families_.end());
    more.push_back(f);
    return from_families(n_, std::move(more));
  }

  friend bool operator==(const Submarriage& a, const Submarriage& b) {
    return a.n_ == b.n_ && a.families_ == b.families_;
  }

 private:
  int n_ = 0;
  std::vector<Family> families_;
  std::array<std::vector<int>, 3> owner_;
};

inline bool is_permutation_of_range(std::span<const int> p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

/// A perfect marriage stored canonically as family i = (i, sigma(i), tau(i)).
class Marriage {
 public:
  static Marriage from_permutations(std::vector<int> sigma, std::vector<int> tau) {
    if (sigma.size() != tau.size() || sigma.empty()) {
      fail(ErrorKind::DimensionMismatch, "sigma and tau must be nonempty and of equal length");
    }
    if (!is_permutation_of_range(sigma)) fail(ErrorKind::NotAPermutation, "sigma");
    if (!is_permutation_of_range(tau)) fail(ErrorKind::NotAPermutation, "tau");
    Marriage m;
    m.sigma_ = std::move(sigma);
    m.tau_ = std::move(tau);
    return m;
  }

  static Marriage from_submarriage(const Submarriage& s) {
    if (!s.is_marriage()) fail(ErrorKind::DimensionMismatch, "submarriage does not cover every player");
    std::vector<int> sigma(s.size()), tau(s.size());
    for (const Family& f : s.families()) {
      sigma[f.woman] = f.man;
      tau[f.woman] = f.dog;
    }
    return from_permutations(std::move(sigma), std::move(tau));
  }

  int size() const { return static_cast<int>(sigma_.size()); }
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& tau() const { return tau_; }

  Family family(int woman) const { return {woman, sigma_[woman], tau_[woman]}; }

  std::vector<Family> families() const {
    std::vector<Family> out;
    for (int i = 0; i < size(); ++i) out.push_back(family(i));
    return out;
  }

  Submarriage as_submarriage() const { return Submarriage::from_families(size(), families()); }

  friend auto operator<=>(const Marriage&, const Marriage&) = default;
  friend bool operator==(const Marriage&, const Marriage&) = default;

 private:
  std::vector<int> sigma_;
  std::vector<int> tau_;
};

/// An unordered player triple, stored sorted ascending.
struct Triple {
  std::array<int, 3> members{};

  static Triple of(int a, int b, int c) {
    std::array<int, 3> m{a, b, c};
    std::sort(m.begin(), m.end());
    return Triple{m};
  }

  bool contains(int u) const { return members[0] == u || members[1] == u || members[2] == u; }

  /// The two members other than u.
  std::pair<int, int> others(int u) const {
    if (members[0] == u) return {members[1], members[2]};
    if (members[1] == u) return {members[0], members[2]};
    return {members[0], members[1]};
  }

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

class PsaInstance {
 public:
  using RankTable = std::vector<std::vector<int>>;

  static PsaInstance from_ranks(int player_count, const RankTable& rows) {
    if (player_count < 3 || player_count % 3 != 0) {
      fail(ErrorKind::PlayerCountNotMultipleOf3, std::to_string(player_count) + " players");
    }
    if (static_cast<int>(rows.size()) != player_count) {
      fail(ErrorKind::DimensionMismatch, std::to_string(rows.size()) + " rows for " +
                                             std::to_string(player_count) + " players");
    }
    PsaInstance inst(player_count);
    const int pairs = inst.pair_count();
    for (int u = 0; u < player_count; ++u) {
      const auto& row = rows[u];
      if (static_cast<int>(row.size()) != pairs) {
        fail(ErrorKind::DimensionMismatch, "player " + std::to_string(u) + " ranks " + std::to_string(row.size()) +
                                               " pairs, expected " + std::to_string(pairs));
      }
      std::vector<bool> seen(pairs, false);
      for (int pair = 0; pair < pairs; ++pair) {
        const int r = row[pair];
        if (r < 0 || r >= pairs) fail(ErrorKind::IndexOutOfRange, "rank " + std::to_string(r));
        if (seen[r]) fail(ErrorKind::DuplicateRank, "player " + std::to_string(u) + " repeats rank " + std::to_string(r));
        seen[r] = true;
        inst.ranks_[static_cast<std::size_t>(u) * pairs + pair] = r;
      }
    }
    return inst;
  }

  static PsaInstance from_preference_lists(int player_count, const RankTable& lists) {
    if (player_count < 3 || player_count % 3 != 0) {
      fail(ErrorKind::PlayerCountNotMultipleOf3, std::to_string(player_count) + " players");
    }
    const int pairs = static_cast<int>(choose(player_count - 1, 2));
    RankTable rows(lists.size());
    for (std::size_t u = 0; u < lists.size(); ++u) {
      if (static_cast<int>(lists[u].size()) != pairs) {
        fail(ErrorKind::DimensionMismatch, "player " + std::to_string(u) + " lists " +
                                               std::to_string(lists[u].size()) + " pairs");
      }
      rows[u].assign(lists[u].size(), pairs);
      std::vector<int> seen(pairs, 0);
      for (std::size_t r = 0; r < lists[u].size(); ++r) {
        const int pair = lists[u][r];
        if (pair < 0 || pair >= pairs) fail(ErrorKind::IndexOutOfRange, "pair " + std::to_string(pair));
        if (seen[pair]++) fail(ErrorKind::DuplicateRank, "pair " + std::to_string(pair) + " listed twice");
        rows[u][pair] = static_cast<int>(r);
      }
    }
    return from_ranks(player_count, rows);
  }

  int player_count() const { return players_; }
  int n() const { return players_ / 3; }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  /// Index of the unordered pair {x, y} in player u's row, for `players` players.
  static int pair_index_in(int players, int u, int x, int y) {
    if (x == y || x == u || y == u || x < 0 || y < 0 || x >= players || y >= players || u < 0 || u >= players) {
      fail(ErrorKind::IndexOutOfRange, "pair {" + std::to_string(x) + "," + std::to_string(y) + "} for player " +
                                           std::to_string(u));
    }
    int i = x < u ? x : x - 1;
    int j = y < u ? y : y - 1;
    if (i > j) std::swap(i, j);
    const int m = players - 1;
    return i * m - i * (i + 1) / 2 + (j - i - 1);
  }

  int pair_index(int u, int x, int y) const { return pair_index_in(players_, u, x, y); }

  /// The two players denoted by pair index idx in player u's row.
  std::pair<int, int> pair_at(int u, int idx) const {
    auto [i, j] = pairs_[idx];
    return {i < u ? i : i + 1, j < u ? j : j + 1};
  }

  int rank(int u, int pair) const { return ranks_[static_cast<std::size_t>(u) * pair_count() + pair]; }
  int rank_of(int u, int x, int y) const { return rank(u, pair_index(u, x, y)); }

  std::span<const int> rank_row(int u) const {
    return {ranks_.data() + static_cast<std::size_t>(u) * pair_count(), static_cast<std::size_t>(pair_count())};
  }

  bool prefers(int u, int pairX, int pairY) const {
    if (u < 0 || u >= players_) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(u));
    if (pairX < 0 || pairX >= pair_count() || pairY < 0 || pairY >= pair_count()) {
      fail(ErrorKind::IndexOutOfRange, "pair index");
    }
    return rank(u, pairX) < rank(u, pairY);
  }

  std::vector<int> preference_list(int u) const {
    std::vector<int> list(pair_count());
    const auto row = rank_row(u);
    for (int pair = 0; pair < pair_count(); ++pair) list[row[pair]] = pair;
    return list;
  }

  RankTable preference_lists() const {
    RankTable out;
    for (int u = 0; u < players_; ++u) out.push_back(preference_list(u));
    return out;
  }

  friend bool operator==(const PsaInstance& a, const PsaInstance& b) {
    return a.players_ == b.players_ && a.ranks_ == b.ranks_;
  }

 private:
  explicit PsaInstance(int players) : players_(players) {
    const int m = players - 1;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) pairs_.emplace_back(i, j);
    }
    ranks_.assign(static_cast<std::size_t>(players) * pairs_.size(), 0);
  }

  int players_;
  std::vector<std::pair<int, int>> pairs_;  // compressed (i, j), i < j
  std::vector<int> ranks_;
};

/// A set of pairwise-disjoint player triples (3PSA).
class Submatching {
 public:
  Submatching() = default;

  static Submatching from_triples(int player_count, std::vector<Triple> triples) {
    Submatching s;
    s.players_ = player_count;
    s.owner_.assign(player_count, -1);
    for (Triple& t : triples) t = Triple::of(t.members[0], t.members[1], t.members[2]);
    std::sort(triples.begin(), triples.end());
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const Triple& t = triples[i];
      if (t.members[0] == t.members[1] || t.members[1] == t.members[2]) {
        fail(ErrorKind::OverlappingFamilies, "triple repeats a player");
      }
      for (int u : t.members) {
        if (u < 0 || u >= player_count) fail(ErrorKind::IndexOutOfRange, "player " + std::to_string(u));
        if (s.owner_[u] != -1) fail(ErrorKind::OverlappingFamilies, "player " + std::to_string(u) + " in two triples");
        s.owner_[u] = static_cast<int>(i);
      }
    }
    s.triples_ = std::move(triples);
    return s;
  }

  int player_count() const { return players_; }
  std::span<const Triple> triples() const { return triples_; }
  std::size_t triple_count() const { return triples_.size(); }
  bool is_matching() const { return static_cast<int>(triples_.size()) * 3 == players_; }
  bool covers(int u) const { return owner_[u] != -1; }

  std::optional<Triple> triple_of(int u) const {
    if (owner_[u] < 0) return std::nullopt;
    return triples_[owner_[u]];
  }

  std::vector<int> covered() const {
    std::vector<int> out;
    for (int u = 0; u < players_; ++u) {
      if (covers(u)) out.push_back(u);
    }
    return out;
  }

  friend bool operator==(const Submatching& a, const Submatching& b) {
    return a.players_ == b.players_ && a.triples_ == b.triples_;
  }

 private:
  int players_ = 0;
  std::vector<Triple> triples_;
  std::vector<int> owner_;
};

struct DmEdge {
  int w = 0;
  int x = 0;
  int y = 0;
  friend constexpr auto operator<=>(const DmEdge&, const DmEdge&) = default;
};

/// Tripartite hypergraph over W, X, Y with |W| = |X| = |Y| = m (0-based indices).
class DmInstance {
 public:
  static DmInstance create(int m, std::vector<DmEdge> edges, bool degree_bounded3 = true) {
    if (m < 0) fail(ErrorKind::DimensionMismatch, "m must be non-negative");
    DmInstance inst;
    inst.m_ = m;
    inst.degree_bounded3_ = degree_bounded3;
    std::array<std::vector<int>, 3> degree;
    for (auto& d : degree) d.assign(m, 0);
    for (const DmEdge& e : edges) {
      for (int v : {e.w, e.x, e.y}) {
        if (v < 0 || v >= m) fail(ErrorKind::IndexOutOfRange, "element " + std::to_string(v) + " outside [0, m)");
      }
      ++degree[0][e.w];
      ++degree[1][e.x];
      ++degree[2][e.y];
    }
    if (degree_bounded3) {
      for (const auto& d : degree) {
        for (int v = 0; v < m; ++v) {
          if (d[v] > 3) fail(ErrorKind::DegreeBoundViolated, "element " + std::to_string(v) + " in " + std::to_string(d[v]) + " edges");
        }
      }
    }
    inst.edges_ = std::move(edges);
    return inst;
  }

  int m() const { return m_; }
  bool degree_bounded3() const { return degree_bounded3_; }
  std::span<const DmEdge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  int max_degree() const {
    std::array<std::vector<int>, 3> degree;
    for (auto& d : degree) d.assign(m_, 0);
    int best = 0;
    for (const DmEdge& e : edges_) {
      best = std::max({best, ++degree[0][e.w], ++degree[1][e.x], ++degree[2][e.y]});
    }
    return best;
  }

  /// True iff the listed edges are pairwise disjoint.
  bool is_matching(std::span<const int> edge_ids) const {
    std::array<std::vector<bool>, 3> used;
    for (auto& u : used) u.assign(m_, false);
    for (int id : edge_ids) {
      if (id < 0 || id >= static_cast<int>(edges_.size())) return false;
      const DmEdge& e = edges_[id];
      if (used[0][e.w] || used[1][e.x] || used[2][e.y]) return false;
      used[0][e.w] = used[1][e.x] = used[2][e.y] = true;
    }
    return true;
  }

  friend bool operator==(const DmInstance&, const DmInstance&) = default;

 private:
  int m_ = 0;
  bool degree_bounded3_ = true;
  std::vector<DmEdge> edges_;
};

/// Restricts preferences to the given (sorted) players of each gender, keeping
/// relative order; player k of the result is the k-th kept player.
inline GsmInstance restrict_to(const GsmInstance& inst, const std::array<std::vector<int>, 3>& keep) {
  const int k = static_cast<int>(keep[0].size());
  if (keep[1].size() != keep[0].size() || keep[2].size() != keep[0].size() || k == 0) {
    fail(ErrorKind::DimensionMismatch, "restriction must keep the same positive number of players per gender");
  }
  std::array<GsmInstance::RankTable, 3> lists;
  for (Gender g : kGenders) {
    const int gi = index_of(g);
    const auto& first = keep[gi == 0 ? 1 : 0];
    const auto& second = keep[gi == 2 ? 1 : 2];
    std::vector<int> first_pos(inst.size(), -1), second_pos(inst.size(), -1);
    for (int i = 0; i < k; ++i) {
      first_pos[first[i]] = i;
      second_pos[second[i]] = i;
    }
    for (int player : keep[gi]) {
      std::vector<int> list;
      for (int pair : inst.preference_list(g, player)) {
        const auto [p1, p2] = inst.pair_at(pair);
        if (first_pos[p1] >= 0 && second_pos[p2] >= 0) list.push_back(first_pos[p1] * k + second_pos[p2]);
      }
      lists[gi].push_back(std::move(list));
    }
  }
  return GsmInstance::from_preference_lists(k, lists);
}

struct StabilityReport {
  std::uint64_t stab = 0;
  std::uint64_t ins = 0;
  std::optional<std::vector<std::array<int, 3>>> unstable;

  std::uint64_t universe() const { return stab + ins; }
};

}  // namespace tristable

#endif  // TRISTABLE_CORE_HPP
