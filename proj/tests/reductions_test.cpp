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

#include <map>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_util.hpp"
#include "tristable/exact.hpp"
#include "tristable/reductions.hpp"

namespace tristable {
namespace {

Literal pos(int v) { return {v, false}; }
Literal neg(int v) { return {v, true}; }

void expect_well_formed(const Reduction& red) {
  const auto& L = red.layout;
  const auto& dm = red.instance;
  EXPECT_EQ(static_cast<int>(L.vertices.size()), 3 * L.base_vertex_count);
  EXPECT_EQ(3 * dm.m(), static_cast<int>(L.vertices.size()));
  EXPECT_LE(dm.max_degree(), 3);
  ASSERT_EQ(dm.edge_count(), L.edges.size());
  // Tripartite: positions W, X, Y of each edge hold vertices of classes 0, 1, 2.
  std::map<std::pair<int, int>, int> by_class_index;
  for (std::size_t v = 0; v < L.vertices.size(); ++v) {
    const auto key = std::pair{L.vertices[v].cls, L.vertices[v].index};
    EXPECT_TRUE(by_class_index.emplace(key, static_cast<int>(v)).second);
  }
  std::vector<int> degree(L.vertices.size(), 0);
  for (std::size_t e = 0; e < L.edges.size(); ++e) {
    const auto& edge = L.edges[e];
    const DmEdge& de = dm.edges()[e];
    for (int c = 0; c < 3; ++c) {
      EXPECT_EQ(L.vertices[edge.vertices[c]].cls, c);
      ++degree[edge.vertices[c]];
    }
    EXPECT_EQ(by_class_index.at({0, de.w}), edge.vertices[0]);
    EXPECT_EQ(by_class_index.at({1, de.x}), edge.vertices[1]);
    EXPECT_EQ(by_class_index.at({2, de.y}), edge.vertices[2]);
  }
  for (std::size_t v = 0; v < L.vertices.size(); ++v) {
    const auto& lv = L.vertices[v];
    if (lv.role == VertexRole::Clause1 || lv.role == VertexRole::Clause2 || lv.is_root()) {
      EXPECT_LE(degree[v], 3);
    } else {
      EXPECT_EQ(degree[v], 2) << lv.label();
    }
  }
}

TEST(SatFormulaTest, Validation) {
  expect_error(ErrorKind::EmptyClause, [] { SatBFormula::create(1, 1, {{}}); });
  expect_error(ErrorKind::OccurrenceBoundViolated, [] { SatBFormula::create(1, 1, {{pos(0)}, {neg(0)}}); });
  expect_error(ErrorKind::IndexOutOfRange, [] { SatBFormula::create(1, 3, {{pos(1)}}); });
  const auto f = SatBFormula::create(2, 3, {{pos(0), neg(1)}, {neg(0)}});
  EXPECT_EQ(f.occurrences(0), 2);
  EXPECT_EQ(f.occurrences(1), 1);
  EXPECT_EQ(f.satisfied_count({true, true}), 1);
  EXPECT_EQ(f.satisfied_count({false, false}), 2);
  EXPECT_EQ(max_satisfiable(f).first, 2);
}

TEST(RingsTest, KFormula) {
  EXPECT_EQ(rings_per_variable(1), 2);  // 2^floor(log2 2.5)
  EXPECT_EQ(rings_per_variable(2), 4);  // 2^floor(log2 4)
  EXPECT_EQ(rings_per_variable(3), 4);  // 2^floor(log2 5.5)
  EXPECT_EQ(rings_per_variable(5), 8);  // 2^floor(log2 8.5)
  EXPECT_EQ(rings_per_variable(4), 4);  // 2^floor(log2 7)
}

TEST(ReductionTest, SingleLiteral) {
  const auto f = SatBFormula::create(1, 1, {{pos(0)}});
  const auto red = sat_to_3dm3(f);
  EXPECT_EQ(red.layout.rings, 2);
  expect_well_formed(red);
  const auto best = max_3dm(red.instance);
  EXPECT_EQ(uncovered_count(red.instance, best.edges), 0);
}

TEST(ReductionTest, VertexBoundConstant) {
  for (int b = 1; b <= 3; ++b) {
    const auto f = SatBFormula::create(2, b, {{pos(0), neg(1)}});
    const auto red = sat_to_3dm3(f);
    EXPECT_LE(static_cast<std::int64_t>(red.layout.vertices.size()),
              vertex_bound_constant(red.layout.rings) * f.clause_count());
  }
  const auto f = SatBFormula::create(3, 3, {{pos(0), pos(1), pos(2)}, {neg(0), neg(1), neg(2)}, {pos(0), neg(1), pos(2)}});
  const auto red = sat_to_3dm3(f);
  expect_well_formed(red);
  EXPECT_LE(static_cast<std::int64_t>(red.layout.vertices.size()), vertex_bound_constant(4) * 3);
}

TEST(ReductionTest, EmptyFormula) {
  const auto f = SatBFormula::create(2, 0, {});
  const auto red = sat_to_3dm3(f);
  EXPECT_EQ(red.instance.m(), 0);
  EXPECT_TRUE(assignment_to_matching(f, red.layout, {true, false}).empty());
}

TEST(EncodeTest, TwoVariableClause) {
  const auto f = SatBFormula::create(2, 1, {{pos(0), pos(1)}});
  const auto red = sat_to_3dm3(f);
  expect_well_formed(red);
  const auto good = assignment_to_matching(f, red.layout, {true, false});
  EXPECT_TRUE(oracle::is_matching(red.instance, good));
  EXPECT_EQ(uncovered_count(red.instance, good), 0);
  const auto bad = assignment_to_matching(f, red.layout, {false, false});
  EXPECT_TRUE(oracle::is_matching(red.instance, bad));
  EXPECT_EQ(uncovered_count(red.instance, bad), 6);
  expect_error(ErrorKind::DimensionMismatch, [&] { assignment_to_matching(f, red.layout, {true}); });
}

TEST(EncodeTest, UncoveredCountsUnsatisfiedClauses) {
  const auto f = SatBFormula::create(3, 3, {{pos(0), neg(1)}, {pos(1), pos(2)}, {neg(0), neg(2)}, {pos(1)}});
  const auto red = sat_to_3dm3(f);
  expect_well_formed(red);
  for (int mask = 0; mask < 8; ++mask) {
    const std::vector<bool> a{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    const auto m = assignment_to_matching(f, red.layout, a);
    ASSERT_TRUE(oracle::is_matching(red.instance, m));
    EXPECT_EQ(uncovered_count(red.instance, m), 6 * (f.clause_count() - f.satisfied_count(a)));
    EXPECT_EQ(decode_matching_to_assignment(f, red.layout, m), a);
  }
}

TEST(DecodeTest, MixedRingIsRejected) {
  const auto f = SatBFormula::create(2, 2, {{pos(0), pos(1)}, {neg(0)}});
  const auto red = sat_to_3dm3(f);
  auto m = assignment_to_matching(f, red.layout, {true, true});
  // Swap ring 0 of variable 0 in copy 0 from true edges to false edges.
  const auto& L = red.layout;
  const int K = L.rings;
  std::set<int> edges(m.begin(), m.end());
  for (int g = 0; g < f.occurrences(0); ++g) {
    const int o = L.occurrence_of(0, g);
    edges.erase(L.copy_edge(0, L.ring_true_edge[o * K]));
  }
  for (int g = 0; g < f.occurrences(0); ++g) {
    const int o = L.occurrence_of(0, g);
    edges.insert(L.copy_edge(0, L.ring_false_edge[o * K]));
  }
  const std::vector<int> mixed(edges.begin(), edges.end());
  expect_error(ErrorKind::NonCanonicalMatching, [&] { decode_matching_to_assignment(f, red.layout, mixed); });
}

TEST(DecodeTest, OptimalMatchingDecodesToSatisfyingAssignment) {
  const std::vector<SatBFormula> formulas{
      SatBFormula::create(1, 1, {{pos(0)}}),
      SatBFormula::create(2, 2, {{pos(0), pos(1)}, {neg(0)}}),
      SatBFormula::create(2, 3, {{neg(0), neg(1)}, {pos(0)}, {neg(1), pos(0)}}),
  };
  for (const auto& f : formulas) {
    const auto red = sat_to_3dm3(f);
    const auto best = max_3dm(red.instance);
    const auto sym = symmetrize_matching(red.layout, best.edges);
    ASSERT_TRUE(oracle::is_matching(red.instance, sym));
    EXPECT_GE(sym.size(), best.size);
    const auto a = decode_matching_to_assignment(f, red.layout, sym);
    EXPECT_EQ(f.satisfied_count(a), f.clause_count());
  }
}

TEST(GapTransferTest, SmallFormulasAgreeWithMaxSat) {
  const std::vector<SatBFormula> formulas{
      SatBFormula::create(1, 2, {{pos(0)}, {neg(0)}}),
      SatBFormula::create(1, 3, {{pos(0)}, {neg(0)}, {neg(0)}}),
      SatBFormula::create(2, 3, {{pos(0), pos(1)}, {neg(0), pos(1)}, {neg(1)}}),
      SatBFormula::create(2, 3, {{pos(0)}, {neg(0), pos(1)}, {neg(1), neg(0)}}),
  };
  for (const auto& f : formulas) {
    const auto red = sat_to_3dm3(f);
    expect_well_formed(red);
    const auto best = max_3dm(red.instance);
    EXPECT_EQ(uncovered_count(red.instance, best.edges), 6 * (f.clause_count() - oracle::max_sat(f)));
  }
}

TEST(SymmetrizeTest, NeverShrinks) {
  const auto f = SatBFormula::create(2, 2, {{pos(0)}, {neg(0), pos(1)}, {neg(1)}});
  const auto red = sat_to_3dm3(f);
  const auto base = assignment_to_matching(f, red.layout, {true, false});
  // Drop a few copy-1 and copy-2 edges: the result is still a matching.
  std::vector<int> damaged;
  for (int e : base) {
    const int copy = red.layout.edges[e].copy;
    if (copy == 0 || e % 3 != 0) damaged.push_back(e);
  }
  ASSERT_TRUE(oracle::is_matching(red.instance, damaged));
  const auto sym = symmetrize_matching(red.layout, damaged);
  EXPECT_TRUE(oracle::is_matching(red.instance, sym));
  EXPECT_GE(sym.size(), damaged.size());
}

TEST(LayoutTest, LabelsAreUnique) {
  const auto f = SatBFormula::create(2, 2, {{pos(0), neg(1)}, {neg(0), pos(1)}});
  const auto red = sat_to_3dm3(f);
  std::set<std::string> labels;
  for (const auto& v : red.layout.vertices) EXPECT_TRUE(labels.insert(v.label()).second) << v.label();
}

}  // namespace
}  // namespace tristable
