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

// Exhaustive solvers used as ground truth: maximally stable marriage and
// maximum stable submarriage for 3GSM, the same two problems for 3PSA, and
// maximum 3-dimensional matching by branch and bound. Every solver reports
// how many candidates it visited so callers can check the search space.

#ifndef TRISTABLE_EXACT_HPP
#define TRISTABLE_EXACT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "tristable/core.hpp"
#include "tristable/parallel.hpp"
#include "tristable/stability.hpp"

namespace tristable {

inline constexpr int kMsmDefaultLimit = 6;
inline constexpr int kMssDefaultLimit = 4;
inline constexpr int kPsaMsmDefaultLimit = 9;  // players
inline constexpr int kPsaMssDefaultLimit = 6;  // players
inline constexpr std::uint64_t kMax3dmDefaultBudget = 200'000'000;

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Calls visit(sigma, tau) for all (n!)^2 marriages in lexicographic (sigma, tau) order.
template <class Visit>
void for_each_marriage(int n, Visit visit) {
  const auto perms = all_permutations(n);
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) visit(sigma, tau);
  }
}

struct MsmResult {
  Marriage marriage;
  std::uint64_t stab = 0;
  std::uint64_t candidates = 0;
};

/// Maximally stable marriage by enumerating all (n!)^2 marriages. Ties go to the
/// lexicographically smallest (sigma, tau); workers split sigma and the join
/// applies the same rule, so the answer does not depend on the worker count.
inline MsmResult msm_opt(const GsmInstance& inst, int limit = kMsmDefaultLimit, int workers = worker_count()) {
  const int n = inst.size();
  if (n > limit) {
    fail(ErrorKind::InstanceTooLarge, "n = " + std::to_string(n) + " exceeds the MSM limit " + std::to_string(limit));
  }
  const auto perms = all_permutations(n);
  const std::uint64_t total = static_cast<std::uint64_t>(n) * n * n;
  workers = std::clamp(workers, 1, static_cast<int>(perms.size()));

  struct Local {
    std::uint64_t best_ins = UINT64_MAX;
    std::size_t sigma = 0, tau = 0;
    std::uint64_t visited = 0;
  };
  std::vector<Local> locals(workers);
  run_workers(workers, [&](int w) {
    Local& L = locals[w];
    for (std::size_t s = w; s < perms.size(); s += workers) {
      for (std::size_t t = 0; t < perms.size(); ++t) {
        ++L.visited;
        const std::uint64_t ins = count_unstable_marriage(inst, perms[s], perms[t]);
        if (ins < L.best_ins) {
          L.best_ins = ins;
          L.sigma = s;
          L.tau = t;
        }
      }
    }
  });
  Local best;
  std::uint64_t visited = 0;
  for (const Local& L : locals) {
    visited += L.visited;
    if (L.best_ins < best.best_ins ||
        (L.best_ins == best.best_ins && std::pair(L.sigma, L.tau) < std::pair(best.sigma, best.tau))) {
      best = L;
    }
  }
  return {Marriage::from_permutations(perms[best.sigma], perms[best.tau]), total - best.best_ins, visited};
}

struct MssResult {
  Submarriage submarriage;
  std::size_t size = 0;
  std::uint64_t candidates = 0;
};

namespace detail {

inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      out.push_back(c);
      return;
    }
    for (int v = start; v < n; ++v) {
      c[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace detail

/// Calls visit(submarriage) for every submarriage with exactly `size` families.
template <class Visit>
void for_each_submarriage_of_size(int n, int size, Visit visit) {
  const auto subsets = detail::combinations(n, size);
  const auto perms = all_permutations(size);
  for (const auto& women : subsets) {
    for (const auto& men : subsets) {
      for (const auto& dogs : subsets) {
        for (const auto& pm : perms) {
          for (const auto& pd : perms) {
            std::vector<Family> fam;
            for (int i = 0; i < size; ++i) fam.push_back({women[i], men[pm[i]], dogs[pd[i]]});
            if (!visit(Submarriage::from_families(n, std::move(fam)))) return;
          }
        }
      }
    }
  }
}

/// Largest stable submarriage, searching sizes from n downwards.
inline MssResult mss_opt(const GsmInstance& inst, int limit = kMssDefaultLimit) {
  const int n = inst.size();
  if (n > limit) {
    fail(ErrorKind::InstanceTooLarge, "n = " + std::to_string(n) + " exceeds the MSS limit " + std::to_string(limit));
  }
  MssResult result;
  result.submarriage = Submarriage::from_families(n, {});
  for (int size = n; size >= 1; --size) {
    bool found = false;
    for_each_submarriage_of_size(n, size, [&](Submarriage s) {
      ++result.candidates;
      if (is_stable_submarriage(inst, s)) {
        result.submarriage = std::move(s);
        result.size = static_cast<std::size_t>(size);
        found = true;
        return false;
      }
      return true;
    });
    if (found) break;
  }
  return result;
}

/// Calls visit(triples) for every perfect 3PSA matching, lexicographic order.
template <class Visit>
void for_each_psa_matching(int players, Visit visit) {
  std::vector<bool> used(players, false);
  std::vector<Triple> triples;
  std::function<void()> rec = [&] {
    int u = 0;
    while (u < players && used[u]) ++u;
    if (u == players) {
      visit(triples);
      return;
    }
    used[u] = true;
    for (int v = u + 1; v < players; ++v) {
      if (used[v]) continue;
      used[v] = true;
      for (int w = v + 1; w < players; ++w) {
        if (used[w]) continue;
        used[w] = true;
        triples.push_back(Triple{{u, v, w}});
        rec();
        triples.pop_back();
        used[w] = false;
      }
      used[v] = false;
    }
    used[u] = false;
  };
  rec();
}

/// Calls visit(triples) for every submatching (including the empty one).
template <class Visit>
void for_each_psa_submatching(int players, Visit visit) {
  std::vector<bool> used(players, false);
  std::vector<Triple> triples;
  std::function<void(int)> rec = [&](int u) {
    while (u < players && used[u]) ++u;
    if (u >= players) {
      visit(triples);
      return;
    }
    rec(u + 1);  // u stays unmatched
    used[u] = true;
    for (int v = u + 1; v < players; ++v) {
      if (used[v]) continue;
      used[v] = true;
      for (int w = v + 1; w < players; ++w) {
        if (used[w]) continue;
        used[w] = true;
        triples.push_back(Triple{{u, v, w}});
        rec(u + 1);
        triples.pop_back();
        used[w] = false;
      }
      used[v] = false;
    }
    used[u] = false;
  };
  rec(0);
}

enum class PsaMode { Msm, Mss };

struct PsaOptResult {
  Submatching solution;
  std::uint64_t value = 0;  // stab for MSM, number of triples for MSS
  std::uint64_t candidates = 0;
};

inline PsaOptResult psa_opt(const PsaInstance& inst, PsaMode mode, int limit = -1) {
  const int players = inst.player_count();
  if (limit < 0) limit = mode == PsaMode::Msm ? kPsaMsmDefaultLimit : kPsaMssDefaultLimit;
  if (players > limit) {
    fail(ErrorKind::InstanceTooLarge,
         std::to_string(players) + " players exceed the limit " + std::to_string(limit));
  }
  PsaOptResult result;
  bool have = false;
  if (mode == PsaMode::Msm) {
    for_each_psa_matching(players, [&](const std::vector<Triple>& triples) {
      ++result.candidates;
      Submatching s = Submatching::from_triples(players, triples);
      const std::uint64_t stab = stability_report_psa(inst, s).stab;
      if (!have || stab > result.value) {
        result.solution = std::move(s);
        result.value = stab;
        have = true;
      }
    });
  } else {
    for_each_psa_submatching(players, [&](const std::vector<Triple>& triples) {
      ++result.candidates;
      if (have && triples.size() <= result.value) return;
      Submatching s = Submatching::from_triples(players, triples);
      if (is_stable_submatching(inst, s)) {
        result.solution = std::move(s);
        result.value = triples.size();
        have = true;
      }
    });
  }
  return result;
}

// --- Maximum 3-dimensional matching ---------------------------------------

struct Max3dmResult {
  std::vector<int> edges;  // indices into the instance's edge list, ascending
  std::size_t size = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

/// Branch and bound minimizing uncovered elements. Branches on the free
/// element with the fewest live edges: cover it by each live edge in turn, or
/// give it up. Because |W| = |X| = |Y|, every class ends with the same number
/// of uncovered elements, so 3 * (largest count of hopeless elements in a
/// class) bounds the final uncovered total from below.
class Max3dmSearch {
 public:
  Max3dmSearch(const DmInstance& dm, std::uint64_t budget) : dm_(dm), m_(dm.m()), budget_(budget) {
    const int verts = 3 * m_;
    incident_.resize(verts);
    for (std::size_t e = 0; e < dm.edge_count(); ++e) {
      for (int v : ends(static_cast<int>(e))) incident_[v].push_back(static_cast<int>(e));
    }
    status_.assign(verts, kFree);
    deg_.resize(verts);
    edge_alive_.assign(dm.edge_count(), true);
    for (int v = 0; v < verts; ++v) {
      deg_[v] = static_cast<int>(incident_[v].size());
      if (deg_[v] == 0) ++hopeless_[v / std::max(m_, 1)];
    }
    best_uncovered_ = 3 * m_ + 1;
  }

  Max3dmResult run() {
    root_bound_ = bound();
    search();
    std::sort(best_.begin(), best_.end());
    return {best_, best_.size(), nodes_};
  }

 private:
  static constexpr std::uint8_t kFree = 0, kCovered = 1, kDead = 2;

  std::array<int, 3> ends(int e) const {
    const DmEdge& d = dm_.edges()[e];
    return {d.w, m_ + d.x, 2 * m_ + d.y};
  }

  int bound() const { return 3 * std::max({hopeless_[0], hopeless_[1], hopeless_[2]}); }

  void kill_edge(int e, std::vector<int>& trail) {
    edge_alive_[e] = false;
    trail.push_back(e);
    for (int v : ends(e)) {
      if (--deg_[v] == 0 && status_[v] == kFree) ++hopeless_[v / m_];
    }
  }

  void restore(std::vector<int>& trail, std::size_t mark) {
    while (trail.size() > mark) {
      const int e = trail.back();
      trail.pop_back();
      edge_alive_[e] = true;
      for (int v : ends(e)) {
        if (deg_[v]++ == 0 && status_[v] == kFree) --hopeless_[v / m_];
      }
    }
  }

  void search() {
    if (++nodes_ > budget_) {
      fail(ErrorKind::Timeout, "3DM search exceeded " + std::to_string(budget_) + " nodes");
    }
    if (bound() >= best_uncovered_) return;

    int pick = -1;
    for (int v = 0; v < 3 * m_; ++v) {
      if (status_[v] == kFree && deg_[v] > 0 && (pick < 0 || deg_[v] < deg_[pick])) {
        pick = v;
        if (deg_[v] == 1) break;
      }
    }
    if (pick < 0) {
      const int uncovered = 3 * (m_ - static_cast<int>(chosen_.size()));
      if (uncovered < best_uncovered_) {
        best_uncovered_ = uncovered;
        best_ = chosen_;
      }
      return;
    }

    std::vector<int> trail;
    const std::vector<int> options = incident_[pick];
    for (int e : options) {
      if (!edge_alive_[e]) continue;
      const auto vs = ends(e);
      for (int v : vs) status_[v] = kCovered;
      for (int v : vs) {
        for (int f : incident_[v]) {
          if (edge_alive_[f]) kill_edge(f, trail);
        }
      }
      chosen_.push_back(e);
      search();
      chosen_.pop_back();
      restore(trail, 0);
      for (int v : vs) status_[v] = kFree;
      if (best_uncovered_ <= root_bound_) return;
    }

    status_[pick] = kDead;
    ++hopeless_[pick / m_];
    for (int f : incident_[pick]) {
      if (edge_alive_[f]) kill_edge(f, trail);
    }
    search();
    restore(trail, 0);
    --hopeless_[pick / m_];
    status_[pick] = kFree;
  }

  const DmInstance& dm_;
  int m_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> incident_;
  std::vector<std::uint8_t> status_;
  std::vector<int> deg_;
  std::vector<bool> edge_alive_;
  std::array<int, 3> hopeless_{0, 0, 0};
  std::vector<int> chosen_;
  std::vector<int> best_;
  int best_uncovered_ = 0;
  int root_bound_ = 0;
};

}  // namespace detail

inline Max3dmResult max_3dm(const DmInstance& dm, std::uint64_t node_budget = kMax3dmDefaultBudget) {
  if (dm.m() == 0) return {};
  return detail::Max3dmSearch(dm, node_budget).run();
}

}  // namespace tristable

#endif  // TRISTABLE_EXACT_HPP
