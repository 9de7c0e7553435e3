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

#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_util.hpp"
#include "tristable/exact.hpp"
#include "tristable/generators.hpp"
#include "tristable/stability.hpp"

namespace tristable {
namespace {

TEST(StabilityGsmTest, SingleFamily) {
  const auto inst = GsmInstance::from_ranks(1, {{{{0}}, {{0}}, {{0}}}});
  const auto r = stability_report_gsm(inst, Marriage::from_permutations({0}, {0}));
  EXPECT_EQ(r.stab, 1u);
  EXPECT_EQ(r.ins, 0u);
}

TEST(StabilityGsmTest, GadgetBlockingTriples) {
  const auto g = gen_gadget2();
  const auto identity = Marriage::from_permutations({0, 1}, {0, 1}).as_submarriage();
  EXPECT_TRUE(is_unstable_triple_gsm(g, identity, {1, 1, 0}));  // a2 b2 d1
  const auto crossed = Submarriage::from_families(2, {{0, 1, 1}, {1, 0, 0}});
  EXPECT_TRUE(is_unstable_triple_gsm(g, crossed, {0, 0, 0}));  // a1 b1 d1
}

TEST(StabilityGsmTest, FamiliesNeverBlock) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = gen_random(4, seed);
    const auto m = Marriage::from_permutations({3, 1, 0, 2}, {1, 0, 3, 2});
    for (const Family& f : m.families()) EXPECT_FALSE(is_unstable_triple_gsm(inst, m.as_submarriage(), f));
  }
}

TEST(StabilityGsmTest, UncoveredPlayerIsAnError) {
  const auto g = gen_gadget2();
  const auto s = Submarriage::from_families(2, {{0, 0, 0}});
  expect_error(ErrorKind::UncoveredPlayer, [&] { is_unstable_triple_gsm(g, s, {1, 0, 0}); });
}

// Frozen from oracle::report_gsm over the four gadget2 marriages.
TEST(StabilityGsmTest, GadgetGoldens) {
  const auto g = gen_gadget2();
  struct Golden {
    std::vector<int> sigma, tau;
    std::uint64_t ins;
    std::vector<oracle::Fam> unstable;
  };
  const std::vector<Golden> goldens{
      {{0, 1}, {0, 1}, 1, {{1, 1, 0}}},
      {{0, 1}, {1, 0}, 1, {{0, 1, 1}}},
      {{1, 0}, {0, 1}, 4, {{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 0}}},
      {{1, 0}, {1, 0}, 1, {{0, 0, 0}}},
  };
  for (const Golden& gold : goldens) {
    const auto m = Marriage::from_permutations(gold.sigma, gold.tau);
    const auto r = stability_report_gsm(g, m, true);
    EXPECT_EQ(r.ins, gold.ins);
    EXPECT_EQ(r.stab, 8 - gold.ins);
    EXPECT_EQ(sorted_unstable(r), gold.unstable);
    EXPECT_GE(r.ins, 1u);
  }
}

TEST(StabilityGsmTest, AgreesWithOracleOnAllSubmarriages) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto inst = gen_random(3, seed);
    for (const auto& fams : oracle::all_submarriages(3)) {
      std::vector<Family> fs;
      for (const auto& f : fams) fs.push_back({f[0], f[1], f[2]});
      const auto s = Submarriage::from_families(3, fs);
      const auto r = stability_report_gsm(inst, s, true);
      const auto o = oracle::report_gsm(inst, fams);
      ASSERT_EQ(r.ins, o.ins);
      ASSERT_EQ(r.stab, o.stab);
      ASSERT_EQ(sorted_unstable(r), o.unstable);
      ASSERT_EQ(r.universe(), fams.size() * fams.size() * fams.size());
      ASSERT_EQ(r.unstable->size(), r.ins);
    }
  }
}

TEST(StabilityGsmTest, FastMarriageCountMatchesReport) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = gen_random(4, seed);
    for_each_marriage(4, [&](const std::vector<int>& s, const std::vector<int>& t) {
      ASSERT_EQ(count_unstable_marriage(inst, s, t),
                stability_report_gsm(inst, Marriage::from_permutations(s, t)).ins);
    });
  }
}

// Unstable triples disjoint from a removed family are unchanged by its removal.
TEST(StabilityGsmTest, RemovalKeepsDisjointBlame) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = gen_random(4, seed);
    const auto m = Marriage::from_permutations({1, 3, 0, 2}, {2, 0, 3, 1}).as_submarriage();
    for (const Family& f : m.families()) {
      const auto smaller = m.without(f);
      const auto before = stability_report_gsm(inst, m, true);
      const auto after = stability_report_gsm(inst, smaller, true);
      auto disjoint = [&](const std::array<int, 3>& t) { return t[0] != f.woman && t[1] != f.man && t[2] != f.dog; };
      std::vector<std::array<int, 3>> a, b;
      for (const auto& t : *before.unstable) {
        if (disjoint(t)) a.push_back(t);
      }
      for (const auto& t : *after.unstable) b.push_back(t);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b);
    }
  }
}

// Adding one family creates at most 3n^2 new unstable triples.
TEST(StabilityGsmTest, ExtensionBound) {
  for (int n = 1; n <= 4; ++n) {
    const auto inst = gen_random(n, 100 + n);
    const std::uint64_t bound = 3ull * n * n;
    for (const auto& fams : oracle::all_submarriages(n)) {
      if (static_cast<int>(fams.size()) == n) continue;
      std::vector<Family> fs;
      for (const auto& f : fams) fs.push_back({f[0], f[1], f[2]});
      const auto s = Submarriage::from_families(n, fs);
      const std::uint64_t base = stability_report_gsm(inst, s).ins;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int d = 0; d < n; ++d) {
            if (s.covers(Gender::Woman, a) || s.covers(Gender::Man, b) || s.covers(Gender::Dog, d)) continue;
            const std::uint64_t grown = stability_report_gsm(inst, s.with({a, b, d})).ins;
            ASSERT_LE(grown, base + bound);
          }
        }
      }
    }
  }
}

TEST(StabilityPsaTest, ThreePlayers) {
  const auto inst = PsaInstance::from_ranks(3, {{0}, {0}, {0}});
  const auto r = stability_report_psa(inst, Submatching::from_triples(3, {Triple::of(0, 1, 2)}));
  EXPECT_EQ(r.stab, 1u);
  EXPECT_EQ(r.ins, 0u);
}

TEST(StabilityPsaTest, MatchedTriplesAreStable) {
  const auto inst = gen_random_psa(9, 4);
  const auto s = Submatching::from_triples(9, {Triple::of(0, 4, 8), Triple::of(1, 2, 3), Triple::of(5, 6, 7)});
  for (const Triple& t : s.triples()) EXPECT_FALSE(is_unstable_triple_psa(inst, s, t));
  expect_error(ErrorKind::UncoveredPlayer, [&] {
    is_unstable_triple_psa(inst, Submatching::from_triples(9, {Triple::of(0, 1, 2)}), Triple::of(0, 1, 3));
  });
}

TEST(StabilityPsaTest, AgreesWithOracleOnAllMatchings) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto inst = gen_random_psa(9, seed);
    for (const auto& ts : oracle::all_psa_matchings(9)) {
      std::vector<Triple> triples;
      for (const auto& t : ts) triples.push_back(Triple::of(t[0], t[1], t[2]));
      const auto r = stability_report_psa(inst, Submatching::from_triples(9, triples), true);
      const auto o = oracle::report_psa(inst, ts);
      ASSERT_EQ(r.ins, o.ins);
      ASSERT_EQ(r.stab, o.stab);
      ASSERT_EQ(r.universe(), choose(9, 3));
      ASSERT_EQ(r.unstable->size(), r.ins);
    }
  }
}

TEST(StabilityPsaTest, SubmatchingUniverseIsCoveredPlayers) {
  const auto inst = gen_random_psa(9, 8);
  const auto s = Submatching::from_triples(9, {Triple::of(0, 4, 8), Triple::of(1, 2, 3)});
  const auto r = stability_report_psa(inst, s);
  EXPECT_EQ(r.universe(), choose(6, 3));
  const auto o = oracle::report_psa(inst, {{0, 4, 8}, {1, 2, 3}});
  EXPECT_EQ(r.ins, o.ins);
}

TEST(StabilityPsaTest, LiftTransfersInstability) {
  const auto g = gen_gadget2();
  const auto lifted = lift_gsm_to_psa(g);
  for_each_marriage(2, [&](const std::vector<int>& s, const std::vector<int>& t) {
    const auto m = Marriage::from_permutations(s, t);
    const auto gsm = stability_report_gsm(g, m);
    const auto psa = stability_report_psa(lifted, lift_submarriage(m.as_submarriage()));
    EXPECT_EQ(psa.ins, gsm.ins);
    EXPECT_EQ(psa.universe(), choose(6, 3));
  });
}

}  // namespace
}  // namespace tristable
