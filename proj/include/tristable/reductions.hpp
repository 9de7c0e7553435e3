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

// 3SAT-B -> 3DM-3 via rings of trees, tripled so that satisfiable formulas
// give perfect matchings.
//
// Single copy f(I). Variable i with d_i literal occurrences gets K rings,
// K = 2^floor(log2(3B/2 + 1)). Ring k has, for each occurrence g, the points
// v[g,k] and vbar[g,k] plus two inner vertices p[g,k], q[g,k], and the edges
//
//   true  edge  {v[g,k],    p[g,k],   q[g,k]}
//   false edge  {vbar[g,k], p[g+1,k], q[g,k]}      (g + 1 taken mod d_i)
//
// so a full ring matching takes all true edges (the variable is true, every
// vbar is left free) or all false edges. For each occurrence g and polarity
// the K points v[g,1..K] (resp. vbar) are the leaves of a complete binary tree
// whose hyperedges are {node, left child, right child}; its root is u[g]
// (resp. ubar[g]). Covering a tree greedily from the leaves upwards pairs the
// levels off, so with tree height h the root of the tree whose leaves are
// taken by the ring stays free iff h is odd, and the root of the tree with
// free leaves stays free iff h is even. The clause edge {root, s1[j], s2[j]}
// for an occurrence is attached to whichever root is free exactly when the
// literal is true: the root of the literal's own polarity for odd h, the
// opposite one for even h.
//
// Tripartition. Roots lie in class 0, a tree node of class c has children of
// classes c+1 and c+2, so leaf k has a class c_k shared by every tree of the
// variable; q[g,k] is c_k + 1 and p[g,k] is c_k + 2, s1 is 1 and s2 is 2
// (all mod 3). Copy t in {0, 1, 2} of f(I) shifts every class by t, which
// makes the three copies of a root land in distinct classes and lets the
// root edge {r_0, r_1, r_2} join them. Each class then holds exactly |V(f)|
// vertices.

#ifndef TRISTABLE_REDUCTIONS_HPP
#define TRISTABLE_REDUCTIONS_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tristable/core.hpp"

namespace tristable {

struct Literal {
  int var = 0;  // 0-based
  bool negated = false;
  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

class SatBFormula {
 public:
  static SatBFormula create(int n_vars, int bound, std::vector<std::vector<Literal>> clauses) {
    if (n_vars < 0 || bound < 0) fail(ErrorKind::DimensionMismatch, "negative variable count or bound");
    SatBFormula f;
    f.n_vars_ = n_vars;
    f.bound_ = bound;
    f.occurrences_.assign(n_vars, 0);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (clauses[j].empty()) fail(ErrorKind::EmptyClause, "clause " + std::to_string(j + 1) + " is empty");
      if (clauses[j].size() > 3) {
        fail(ErrorKind::DimensionMismatch, "clause " + std::to_string(j + 1) + " has more than 3 literals");
      }
      for (const Literal& lit : clauses[j]) {
        if (lit.var < 0 || lit.var >= n_vars) fail(ErrorKind::IndexOutOfRange, "variable " + std::to_string(lit.var + 1));
        ++f.occurrences_[lit.var];
      }
    }
    for (int i = 0; i < n_vars; ++i) {
      if (f.occurrences_[i] > bound) {
        fail(ErrorKind::OccurrenceBoundViolated, "variable " + std::to_string(i + 1) + " occurs " +
                                                     std::to_string(f.occurrences_[i]) + " times, B = " +
                                                     std::to_string(bound));
      }
    }
    f.clauses_ = std::move(clauses);
    return f;
  }

  int var_count() const { return n_vars_; }
  int bound() const { return bound_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }
  /// d_i: number of literal occurrences of variable i.
  int occurrences(int var) const { return occurrences_[var]; }

  static bool literal_true(const Literal& lit, const std::vector<bool>& assignment) {
    return assignment[lit.var] != lit.negated;
  }

  int satisfied_count(const std::vector<bool>& assignment) const {
    if (static_cast<int>(assignment.size()) != n_vars_) fail(ErrorKind::DimensionMismatch, "assignment size");
    int count = 0;
    for (const auto& clause : clauses_) {
      if (std::any_of(clause.begin(), clause.end(), [&](const Literal& l) { return literal_true(l, assignment); })) {
        ++count;
      }
    }
    return count;
  }

  friend bool operator==(const SatBFormula&, const SatBFormula&) = default;

 private:
  int n_vars_ = 0;
  int bound_ = 0;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<int> occurrences_;
};

/// opt(I) by trying all 2^n assignments; returns (count, first optimal assignment).
inline std::pair<int, std::vector<bool>> max_satisfiable(const SatBFormula& f) {
  const int n = f.var_count();
  if (n > 24) fail(ErrorKind::InstanceTooLarge, "brute-force MAX-SAT limited to 24 variables");
  std::pair<int, std::vector<bool>> best{-1, {}};
  std::vector<bool> a(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1;
    const int s = f.satisfied_count(a);
    if (s > best.first) best = {s, a};
  }
  return best;
}

/// K = 2^floor(log2(3B/2 + 1)), the number of rings per variable.
constexpr int rings_per_variable(int bound) {
  int k = 1;
  while (2 * (2 * k) <= 3 * bound + 2) k *= 2;  // 2k <= 3B/2 + 1
  return k;
}

constexpr int log2_exact(int k) {
  int h = 0;
  while ((1 << h) < k) ++h;
  return h;
}

/// C with |V(f'(I))| <= C * m: per occurrence 4K ring and 2(K-1) tree vertices,
/// at most 3m occurrences, 2m clause vertices, three copies.
constexpr std::int64_t vertex_bound_constant(int k) { return 54LL * k - 12; }

enum class VertexRole : std::uint8_t { RingPositive, RingNegative, RingP, RingQ, TreeNode, Clause1, Clause2 };
enum class EdgeKind : std::uint8_t { RingTrue, RingFalse, Tree, Clause, Root };

constexpr std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::RingTrue: return "ring-true";
    case EdgeKind::RingFalse: return "ring-false";
    case EdgeKind::Tree: return "tree";
    case EdgeKind::Clause: return "clause";
    case EdgeKind::Root: return "root";
  }
  return "?";
}

struct LayoutVertex {
  VertexRole role = VertexRole::RingP;
  int copy = 0;
  int cls = 0;    // 0 = W, 1 = X, 2 = Y
  int index = 0;  // position within its class in the 3DM instance
  int var = -1;
  int gamma = -1;
  int ring = -1;
  int node = -1;  // heap index in its tree, 1 = root
  int clause = -1;
  bool positive = true;

  bool is_root() const { return role == VertexRole::TreeNode && node == 1; }

  std::string label() const {
    const auto num = [](int v) { return std::to_string(v + 1); };
    std::string s;
    switch (role) {
      case VertexRole::RingPositive: s = "v" + num(var) + "[" + num(gamma) + "," + num(ring) + "]"; break;
      case VertexRole::RingNegative: s = "vbar" + num(var) + "[" + num(gamma) + "," + num(ring) + "]"; break;
      case VertexRole::RingP: s = "p" + num(var) + "[" + num(gamma) + "," + num(ring) + "]"; break;
      case VertexRole::RingQ: s = "q" + num(var) + "[" + num(gamma) + "," + num(ring) + "]"; break;
      case VertexRole::TreeNode:
        s = node == 1 ? std::string(positive ? "u" : "ubar") + num(var) + "[" + num(gamma) + "]"
                      : std::string(positive ? "t" : "tbar") + num(var) + "[" + num(gamma) + "," + std::to_string(node) + "]";
        break;
      case VertexRole::Clause1: s = "s1[" + num(clause) + "]"; break;
      case VertexRole::Clause2: s = "s2[" + num(clause) + "]"; break;
    }
    return s + "@" + std::to_string(copy + 1);
  }
};

struct LayoutEdge {
  EdgeKind kind = EdgeKind::Tree;
  int copy = -1;  // -1 for root edges
  std::array<int, 3> vertices{};  // global vertex ids ordered W, X, Y
  int var = -1;
  int gamma = -1;
  int ring = -1;
  int clause = -1;
  bool positive = true;
};

struct Occurrence {
  int var = 0;
  int gamma = 0;
  int clause = 0;
  bool positive = true;         // literal polarity
  bool attach_positive = true;  // polarity of the root carrying the clause edge
};

/// Labeled vertex and edge registry of f'(I). Copy t of a local vertex (edge)
/// id has global id t * base_vertex_count (t * base_edge_count) + local id;
/// root edges come after all copies.
struct ReductionLayout {
  int rings = 0;  // K
  int tree_height = 0;
  int base_vertex_count = 0;
  int base_edge_count = 0;
  std::vector<LayoutVertex> vertices;
  std::vector<LayoutEdge> edges;
  std::vector<Occurrence> occurrences;
  std::vector<int> first_occurrence;  // per variable, index into occurrences

  // Local (single-copy) ids, indexed by occurrence o, ring k, polarity, heap node.
  std::vector<int> ring_true_edge;   // [o * K + k]
  std::vector<int> ring_false_edge;  // [o * K + k]
  std::vector<int> tree_edge;        // [(o * 2 + pol) * K + node], pol 0 = positive
  std::vector<int> tree_vertex;      // [(o * 2 + pol) * K + node]
  std::vector<int> clause_edge;      // [o]
  std::vector<int> root_edge;        // [o * 2 + pol], global ids

  int copy_edge(int copy, int local) const { return copy * base_edge_count + local; }
  int copy_vertex(int copy, int local) const { return copy * base_vertex_count + local; }
  int root_vertex(int o, bool positive) const { return tree_vertex[(o * 2 + (positive ? 0 : 1)) * rings + 1]; }
  int occurrence_of(int var, int gamma) const { return first_occurrence[var] + gamma; }
};

struct Reduction {
  DmInstance instance;
  ReductionLayout layout;
};

namespace detail {

constexpr int tree_node_class(int node) {
  // Path from the root: a left step adds 1, a right step adds 2.
  int cls = 0;
  int depth = 0;
  while ((node >> depth) > 1) ++depth;
  for (int level = depth - 1; level >= 0; --level) cls += ((node >> level) & 1) ? 2 : 1;
  return cls % 3;
}

}  // namespace detail

inline Reduction sat_to_3dm3(const SatBFormula& formula) {
  ReductionLayout L;
  const int K = rings_per_variable(formula.bound());
  L.rings = K;
  L.tree_height = log2_exact(K);
  const bool even_height = L.tree_height % 2 == 0;

  // Occurrences in clause order, numbered per variable.
  std::vector<int> seen(formula.var_count(), 0);
  std::vector<std::vector<Occurrence>> per_var(formula.var_count());
  for (int j = 0; j < formula.clause_count(); ++j) {
    for (const Literal& lit : formula.clauses()[j]) {
      const bool positive = !lit.negated;
      per_var[lit.var].push_back({lit.var, seen[lit.var]++, j, positive, positive != even_height});
    }
  }
  for (int i = 0; i < formula.var_count(); ++i) {
    L.first_occurrence.push_back(static_cast<int>(L.occurrences.size()));
    L.occurrences.insert(L.occurrences.end(), per_var[i].begin(), per_var[i].end());
  }
  const int occ = static_cast<int>(L.occurrences.size());

  // Local vertices of one copy.
  std::vector<LayoutVertex> local;
  auto add_vertex = [&](LayoutVertex v) {
    local.push_back(v);
    return static_cast<int>(local.size()) - 1;
  };
  std::vector<int> ring_v(occ * K), ring_vbar(occ * K), ring_p(occ * K), ring_q(occ * K);
  L.tree_vertex.assign(static_cast<std::size_t>(occ) * 2 * K, -1);
  for (int o = 0; o < occ; ++o) {
    const Occurrence& oc = L.occurrences[o];
    for (int k = 0; k < K; ++k) {
      const int leaf_cls = detail::tree_node_class(K + k);
      LayoutVertex base;
      base.var = oc.var;
      base.gamma = oc.gamma;
      base.ring = k;
      base.role = VertexRole::RingPositive;
      base.cls = leaf_cls;
      ring_v[o * K + k] = add_vertex(base);
      base.role = VertexRole::RingNegative;
      base.positive = false;
      ring_vbar[o * K + k] = add_vertex(base);
      base.positive = true;
      base.role = VertexRole::RingP;
      base.cls = (leaf_cls + 2) % 3;
      ring_p[o * K + k] = add_vertex(base);
      base.role = VertexRole::RingQ;
      base.cls = (leaf_cls + 1) % 3;
      ring_q[o * K + k] = add_vertex(base);
    }
    for (int pol = 0; pol < 2; ++pol) {
      for (int node = 1; node < K; ++node) {
        LayoutVertex v;
        v.role = VertexRole::TreeNode;
        v.var = oc.var;
        v.gamma = oc.gamma;
        v.node = node;
        v.positive = pol == 0;
        v.cls = detail::tree_node_class(node);
        L.tree_vertex[(o * 2 + pol) * K + node] = add_vertex(v);
      }
      // A single-leaf tree (K = 1) is its own root.
      if (K == 1) L.tree_vertex[(o * 2 + pol) * K + 1 - 1 + 0] = pol == 0 ? ring_v[o] : ring_vbar[o];
    }
  }
  std::vector<int> s1(formula.clause_count()), s2(formula.clause_count());
  for (int j = 0; j < formula.clause_count(); ++j) {
    LayoutVertex v;
    v.clause = j;
    v.role = VertexRole::Clause1;
    v.cls = 1;
    s1[j] = add_vertex(v);
    v.role = VertexRole::Clause2;
    v.cls = 2;
    s2[j] = add_vertex(v);
  }
  L.base_vertex_count = static_cast<int>(local.size());

  // Local edges of one copy.
  std::vector<LayoutEdge> local_edges;
  auto add_edge = [&](LayoutEdge e) {
    local_edges.push_back(e);
    return static_cast<int>(local_edges.size()) - 1;
  };
  L.ring_true_edge.assign(occ * K, -1);
  L.ring_false_edge.assign(occ * K, -1);
  L.tree_edge.assign(static_cast<std::size_t>(occ) * 2 * K, -1);
  L.clause_edge.assign(occ, -1);
  for (int var = 0; var < formula.var_count(); ++var) {
    const int d = formula.occurrences(var);
    for (int g = 0; g < d; ++g) {
      const int o = L.occurrence_of(var, g);
      const int next = L.occurrence_of(var, (g + 1) % d);
      for (int k = 0; k < K; ++k) {
        LayoutEdge e;
        e.var = var;
        e.gamma = g;
        e.ring = k;
        e.kind = EdgeKind::RingTrue;
        e.vertices = {ring_v[o * K + k], ring_p[o * K + k], ring_q[o * K + k]};
        L.ring_true_edge[o * K + k] = add_edge(e);
        e.kind = EdgeKind::RingFalse;
        e.vertices = {ring_vbar[o * K + k], ring_p[next * K + k], ring_q[o * K + k]};
        L.ring_false_edge[o * K + k] = add_edge(e);
      }
    }
  }
  for (int o = 0; o < occ; ++o) {
    for (int pol = 0; pol < 2; ++pol) {
      auto node_vertex = [&](int node) {
        if (node >= K) return pol == 0 ? ring_v[o * K + node - K] : ring_vbar[o * K + node - K];
        return L.tree_vertex[(o * 2 + pol) * K + node];
      };
      for (int node = 1; node < K; ++node) {
        LayoutEdge e;
        e.kind = EdgeKind::Tree;
        e.var = L.occurrences[o].var;
        e.gamma = L.occurrences[o].gamma;
        e.positive = pol == 0;
        e.vertices = {node_vertex(node), node_vertex(2 * node), node_vertex(2 * node + 1)};
        L.tree_edge[(o * 2 + pol) * K + node] = add_edge(e);
      }
    }
  }
  for (int o = 0; o < occ; ++o) {
    const Occurrence& oc = L.occurrences[o];
    LayoutEdge e;
    e.kind = EdgeKind::Clause;
    e.var = oc.var;
    e.gamma = oc.gamma;
    e.clause = oc.clause;
    e.positive = oc.positive;
    e.vertices = {L.root_vertex(o, oc.attach_positive), s1[oc.clause], s2[oc.clause]};
    L.clause_edge[o] = add_edge(e);
  }
  L.base_edge_count = static_cast<int>(local_edges.size());

  // Three shifted copies.
  for (int copy = 0; copy < 3; ++copy) {
    for (LayoutVertex v : local) {
      v.copy = copy;
      v.cls = (v.cls + copy) % 3;
      L.vertices.push_back(v);
    }
  }
  std::array<int, 3> next_index{0, 0, 0};
  for (LayoutVertex& v : L.vertices) v.index = next_index[v.cls]++;
  if (next_index[0] != next_index[1] || next_index[1] != next_index[2]) {
    fail(ErrorKind::DimensionMismatch, "internal: unequal class sizes");
  }
  const int m = next_index[0];

  auto order_by_class = [&](std::array<int, 3> vs) {
    std::array<int, 3> out{-1, -1, -1};
    for (int v : vs) {
      int& slot = out[L.vertices[v].cls];
      if (slot != -1) fail(ErrorKind::DimensionMismatch, "internal: edge is not tripartite");
      slot = v;
    }
    return out;
  };
  for (int copy = 0; copy < 3; ++copy) {
    for (LayoutEdge e : local_edges) {
      e.copy = copy;
      for (int& v : e.vertices) v = L.copy_vertex(copy, v);
      e.vertices = order_by_class(e.vertices);
      L.edges.push_back(e);
    }
  }
  L.root_edge.assign(static_cast<std::size_t>(occ) * 2, -1);
  for (int o = 0; o < occ; ++o) {
    for (int pol = 0; pol < 2; ++pol) {
      const int r = L.root_vertex(o, pol == 0);
      LayoutEdge e;
      e.kind = EdgeKind::Root;
      e.var = L.occurrences[o].var;
      e.gamma = L.occurrences[o].gamma;
      e.positive = pol == 0;
      e.vertices = order_by_class({L.copy_vertex(0, r), L.copy_vertex(1, r), L.copy_vertex(2, r)});
      L.root_edge[o * 2 + pol] = static_cast<int>(L.edges.size());
      L.edges.push_back(e);
    }
  }

  std::vector<DmEdge> dm_edges;
  for (const LayoutEdge& e : L.edges) {
    dm_edges.push_back({L.vertices[e.vertices[0]].index, L.vertices[e.vertices[1]].index,
                        L.vertices[e.vertices[2]].index});
  }
  return {DmInstance::create(m, std::move(dm_edges), true), std::move(L)};
}

/// Vertices of the 3DM instance left uncovered by a matching.
inline int uncovered_count(const DmInstance& dm, std::span<const int> matching) {
  return 3 * (dm.m() - static_cast<int>(matching.size()));
}

/// The canonical matching of an assignment: consistent rings, greedy leaf-to-root
/// tree edges, one clause edge per satisfied clause (its first true literal) in
/// every copy, and root edges for every root left free in all copies.
inline std::vector<int> assignment_to_matching(const SatBFormula& formula, const ReductionLayout& L,
                                               const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != formula.var_count()) {
    fail(ErrorKind::DimensionMismatch, "assignment covers " + std::to_string(assignment.size()) + " of " +
                                           std::to_string(formula.var_count()) + " variables");
  }
  const int K = L.rings;
  std::vector<bool> covered(L.base_vertex_count, false);
  std::vector<int> local;
  auto take = [&](int e) {
    local.push_back(e);
    // Local edges of copy 0 carry local vertex ids.
    for (int v : L.edges[e].vertices) covered[v] = true;
  };
  const int occ = static_cast<int>(L.occurrences.size());
  for (int o = 0; o < occ; ++o) {
    const bool value = assignment[L.occurrences[o].var];
    for (int k = 0; k < K; ++k) take(value ? L.ring_true_edge[o * K + k] : L.ring_false_edge[o * K + k]);
  }
  for (int o = 0; o < occ; ++o) {
    for (int pol = 0; pol < 2; ++pol) {
      for (int node = K - 1; node >= 1; --node) {
        const int e = L.tree_edge[(o * 2 + pol) * K + node];
        const auto& vs = L.edges[e].vertices;
        if (!covered[vs[0]] && !covered[vs[1]] && !covered[vs[2]]) take(e);
      }
    }
  }
  std::vector<bool> clause_done(formula.clause_count(), false);
  for (int o = 0; o < occ; ++o) {
    const Occurrence& oc = L.occurrences[o];
    if (clause_done[oc.clause] || assignment[oc.var] != oc.positive) continue;
    const int e = L.clause_edge[o];
    const auto& vs = L.edges[e].vertices;
    if (!covered[vs[0]] && !covered[vs[1]] && !covered[vs[2]]) {
      take(e);
      clause_done[oc.clause] = true;
    }
  }
  std::vector<int> out;
  for (int copy = 0; copy < 3; ++copy) {
    for (int e : local) out.push_back(L.copy_edge(copy, e));
  }
  for (int o = 0; o < occ; ++o) {
    for (int pol = 0; pol < 2; ++pol) {
      if (!covered[L.root_vertex(o, pol == 0)]) out.push_back(L.root_edge[o * 2 + pol]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Reads the truth assignment off the ring edges. Every ring of a variable, in
/// every copy, must be entirely true edges or entirely false edges, and all must
/// agree. Variables without occurrences decode as false.
inline std::vector<bool> decode_matching_to_assignment(const SatBFormula& formula, const ReductionLayout& L,
                                                       std::span<const int> matching) {
  const std::set<int> chosen(matching.begin(), matching.end());
  const int K = L.rings;
  std::vector<bool> assignment(formula.var_count(), false);
  for (int var = 0; var < formula.var_count(); ++var) {
    const int d = formula.occurrences(var);
    if (d == 0) continue;
    int decided = -1;
    for (int copy = 0; copy < 3; ++copy) {
      for (int k = 0; k < K; ++k) {
        int t = 0, f = 0;
        for (int g = 0; g < d; ++g) {
          const int o = L.occurrence_of(var, g);
          t += chosen.count(L.copy_edge(copy, L.ring_true_edge[o * K + k])) ? 1 : 0;
          f += chosen.count(L.copy_edge(copy, L.ring_false_edge[o * K + k])) ? 1 : 0;
        }
        int value;
        if (t == d && f == 0) {
          value = 1;
        } else if (f == d && t == 0) {
          value = 0;
        } else {
          fail(ErrorKind::NonCanonicalMatching, "variable " + std::to_string(var + 1) + " ring " +
                                                    std::to_string(k + 1) + " copy " + std::to_string(copy + 1) +
                                                    " mixes true and false edges");
        }
        if (decided == -1) {
          decided = value;
        } else if (decided != value) {
          fail(ErrorKind::NonCanonicalMatching, "rings of variable " + std::to_string(var + 1) + " disagree");
        }
      }
    }
    assignment[var] = decided == 1;
  }
  return assignment;
}

/// Replaces every copy's part of the matching by the largest one (lowest copy
/// on ties) and re-adds root edges for roots free in all three copies.
inline std::vector<int> symmetrize_matching(const ReductionLayout& L, std::span<const int> matching) {
  std::array<std::vector<int>, 3> parts;
  for (int e : matching) {
    const int copy = L.edges[e].copy;
    if (copy >= 0) parts[copy].push_back(e - copy * L.base_edge_count);
  }
  int largest = 0;
  for (int c = 1; c < 3; ++c) {
    if (parts[c].size() > parts[largest].size()) largest = c;
  }
  std::vector<bool> covered(L.base_vertex_count, false);
  std::vector<int> out;
  for (int e : parts[largest]) {
    for (int v : L.edges[e].vertices) covered[v] = true;  // copy-0 ids are local ids
  }
  for (int copy = 0; copy < 3; ++copy) {
    for (int e : parts[largest]) out.push_back(L.copy_edge(copy, e));
  }
  for (std::size_t o = 0; o < L.occurrences.size(); ++o) {
    for (int pol = 0; pol < 2; ++pol) {
      if (!covered[L.root_vertex(static_cast<int>(o), pol == 0)]) out.push_back(L.root_edge[o * 2 + pol]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tristable

#endif  // TRISTABLE_REDUCTIONS_HPP
