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

#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "tristable/core.hpp"
#include "tristable/exact.hpp"
#include "tristable/generators.hpp"

namespace tristable {
namespace {

TEST(GsmInstanceTest, SinglePlayerPerGender) {
  const auto inst = GsmInstance::from_ranks(1, {{{{0}}, {{0}}, {{0}}}});
  EXPECT_EQ(inst.size(), 1);
  EXPECT_EQ(inst.pair_count(), 1);
  EXPECT_EQ(inst.rank(Gender::Dog, 0, 0), 0);
}

TEST(GsmInstanceTest, RejectsDuplicateRank) {
  GsmInstance::RankTable ok{{0, 1, 2, 3}, {3, 2, 1, 0}};
  GsmInstance::RankTable dup{{0, 0, 2, 3}, {3, 2, 1, 0}};
  expect_error(ErrorKind::DuplicateRank, [&] { GsmInstance::from_ranks(2, {ok, dup, ok}); });
  expect_error(ErrorKind::DuplicateRank, [&] { GsmInstance::from_preference_lists(2, {ok, dup, ok}); });
}

TEST(GsmInstanceTest, RejectsWrongShape) {
  GsmInstance::RankTable ok{{0, 1, 2, 3}, {3, 2, 1, 0}};
  GsmInstance::RankTable short_row{{0, 1, 2}, {3, 2, 1, 0}};
  GsmInstance::RankTable one_row{{0, 1, 2, 3}};
  expect_error(ErrorKind::DimensionMismatch, [&] { GsmInstance::from_ranks(2, {ok, short_row, ok}); });
  expect_error(ErrorKind::DimensionMismatch, [&] { GsmInstance::from_ranks(2, {ok, ok, one_row}); });
  expect_error(ErrorKind::DimensionMismatch, [&] { GsmInstance::from_preference_lists(2, {short_row, ok, ok}); });
  expect_error(ErrorKind::IndexOutOfRange, [&] { GsmInstance::from_ranks(2, {ok, ok, {{0, 1, 2, 4}, {0, 1, 2, 3}}}); });
}

TEST(GsmInstanceTest, PreferenceListsAreInverseOfRanks) {
  const auto inst = gen_random(4, 9);
  for (Gender g : kGenders) {
    for (int p = 0; p < 4; ++p) {
      const auto list = inst.preference_list(g, p);
      for (int r = 0; r < inst.pair_count(); ++r) EXPECT_EQ(inst.rank(g, p, list[r]), r);
    }
  }
  EXPECT_EQ(GsmInstance::from_preference_lists(4, inst.preference_lists()), inst);
}

TEST(GsmInstanceTest, PrefersOnGadget) {
  const auto g = gen_gadget2();
  // a1 | b1d1 b2d2
  EXPECT_TRUE(g.prefers(Gender::Woman, 0, g.pair_index(0, 0), g.pair_index(1, 1)));
  EXPECT_FALSE(g.prefers(Gender::Woman, 0, g.pair_index(1, 1), g.pair_index(0, 0)));
  expect_error(ErrorKind::IndexOutOfRange, [&] { g.prefers(Gender::Woman, 2, 0, 1); });
  expect_error(ErrorKind::IndexOutOfRange, [&] { g.prefers(Gender::Woman, 0, 0, 4); });
}

TEST(GsmInstanceTest, PrefersIsIrreflexive) {
  const auto g = gen_random(3, 4);
  for (int pair = 0; pair < 9; ++pair) EXPECT_FALSE(g.prefers(Gender::Man, 1, pair, pair));
}

TEST(GsmInstanceTest, PrefersIsStrictTotalOrder) {
  const auto g = gen_random(3, 11);
  for (Gender gender : kGenders) {
    for (int p = 0; p < 3; ++p) {
      for (int x = 0; x < 9; ++x) {
        for (int y = 0; y < 9; ++y) {
          const int holds = (g.prefers(gender, p, x, y) ? 1 : 0) + (g.prefers(gender, p, y, x) ? 1 : 0) + (x == y ? 1 : 0);
          EXPECT_EQ(holds, 1);
        }
      }
    }
  }
}

TEST(GsmInstanceTest, AdversarialBlocks) {
  const auto inst = gen_adversarial(4);
  // A1 = {0, 1} ranks B1 x D1 at 0..3 and B2 x D2 at 4..7.
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int d = 0; d < 2; ++d) {
        EXPECT_LT(inst.rank(Gender::Woman, a, inst.pair_index(b, d)), 4);
        EXPECT_GE(inst.rank(Gender::Woman, a, inst.pair_index(b + 2, d + 2)), 4);
        EXPECT_LT(inst.rank(Gender::Woman, a, inst.pair_index(b + 2, d + 2)), 8);
        EXPECT_TRUE(inst.prefers(Gender::Woman, a, inst.pair_index(b, d), inst.pair_index(2 + b, 2 + d)));
      }
    }
  }
}

TEST(MarriageTest, FromPermutations) {
  const auto id = Marriage::from_permutations({0, 1}, {0, 1});
  EXPECT_EQ(id.families(), (std::vector<Family>{{0, 0, 0}, {1, 1, 1}}));
  const auto swapped = Marriage::from_permutations({1, 0}, {0, 1});
  EXPECT_EQ(swapped.families(), (std::vector<Family>{{0, 1, 0}, {1, 0, 1}}));
  expect_error(ErrorKind::NotAPermutation, [] { Marriage::from_permutations({0, 0}, {0, 1}); });
  expect_error(ErrorKind::NotAPermutation, [] { Marriage::from_permutations({0, 1}, {0, 2}); });
  expect_error(ErrorKind::DimensionMismatch, [] { Marriage::from_permutations({0, 1}, {0}); });
}

TEST(MarriageTest, RoundTripThroughSubmarriage) {
  const auto m = Marriage::from_permutations({2, 0, 1}, {1, 2, 0});
  const auto back = Marriage::from_submarriage(m.as_submarriage());
  EXPECT_EQ(back, m);
  EXPECT_EQ(back.sigma(), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(back.tau(), (std::vector<int>{1, 2, 0}));
}

TEST(MarriageTest, EnumerationIsBijective) {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::vector<Family>> seen;
    std::uint64_t count = 0;
    for_each_marriage(n, [&](const std::vector<int>& s, const std::vector<int>& t) {
      ++count;
      const auto m = Marriage::from_permutations(s, t);
      seen.insert(m.families());
      const auto back = Marriage::from_submarriage(m.as_submarriage());
      EXPECT_EQ(back.sigma(), s);
      EXPECT_EQ(back.tau(), t);
    });
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    EXPECT_EQ(count, fact * fact);
    EXPECT_EQ(seen.size(), fact * fact);
  }
}

TEST(SubmarriageTest, RejectsOverlap) {
  expect_error(ErrorKind::OverlappingFamilies, [] { Submarriage::from_families(3, {{0, 0, 0}, {1, 0, 2}}); });
  expect_error(ErrorKind::IndexOutOfRange, [] { Submarriage::from_families(2, {{0, 2, 0}}); });
}

TEST(SubmarriageTest, PartnerLookup) {
  const auto s = Submarriage::from_families(3, {{2, 0, 1}});
  EXPECT_TRUE(s.covers(Gender::Woman, 2));
  EXPECT_FALSE(s.covers(Gender::Woman, 0));
  EXPECT_EQ(s.family_of(Gender::Dog, 1), (Family{2, 0, 1}));
  EXPECT_EQ(s.family_of(Gender::Man, 2), std::nullopt);
  EXPECT_FALSE(s.is_marriage());
  EXPECT_EQ(s.with({0, 1, 0}).family_count(), 2u);
  EXPECT_EQ(s.without({2, 0, 1}).family_count(), 0u);
}

TEST(PsaInstanceTest, ThreePlayers) {
  const auto inst = PsaInstance::from_ranks(3, {{0}, {0}, {0}});
  EXPECT_EQ(inst.n(), 1);
  EXPECT_EQ(inst.pair_count(), 1);
}

TEST(PsaInstanceTest, RejectsBadShapes) {
  expect_error(ErrorKind::PlayerCountNotMultipleOf3, [] { PsaInstance::from_ranks(4, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); });
  PsaInstance::RankTable rows(6, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  rows[4] = {0, 1, 2, 3, 4, 5, 6, 7, 8, 8};
  expect_error(ErrorKind::DuplicateRank, [&] { PsaInstance::from_ranks(6, rows); });
  expect_error(ErrorKind::DuplicateRank, [&] { PsaInstance::from_preference_lists(6, rows); });
  expect_error(ErrorKind::DimensionMismatch, [] { PsaInstance::from_ranks(3, {{0}, {0}}); });
}

TEST(PsaInstanceTest, PairIndexIsLexicographicOverOthers) {
  // Player 2 of 6: others 0, 1, 3, 4, 5.
  std::vector<std::pair<int, int>> expected;
  for (int x : {0, 1, 3, 4, 5}) {
    for (int y : {0, 1, 3, 4, 5}) {
      if (x < y) expected.push_back({x, y});
    }
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(PsaInstance::pair_index_in(6, 2, expected[i].first, expected[i].second), static_cast<int>(i));
    EXPECT_EQ(PsaInstance::pair_index_in(6, 2, expected[i].second, expected[i].first), static_cast<int>(i));
  }
  const auto inst = gen_random_psa(6, 3);
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(inst.pair_at(2, static_cast<int>(i)), expected[i]);
}

TEST(PsaInstanceTest, LiftOfGadgetIsValid) {
  const auto lifted = lift_gsm_to_psa(gen_gadget2());
  EXPECT_EQ(lifted.player_count(), 6);
  EXPECT_EQ(PsaInstance::from_preference_lists(6, lifted.preference_lists()), lifted);
}

TEST(SubmatchingTest, Validation) {
  expect_error(ErrorKind::OverlappingFamilies, [] { Submatching::from_triples(6, {Triple::of(0, 1, 2), Triple::of(2, 3, 4)}); });
  const auto s = Submatching::from_triples(6, {Triple::of(4, 0, 2)});
  EXPECT_EQ(s.triples()[0].members, (std::array<int, 3>{0, 2, 4}));
  EXPECT_FALSE(s.is_matching());
  EXPECT_EQ(s.covered(), (std::vector<int>{0, 2, 4}));
}

TEST(DmInstanceTest, DegreeBound) {
  expect_error(ErrorKind::DegreeBoundViolated,
               [] { DmInstance::create(2, {{0, 0, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 0}}, true); });
  const auto dm = DmInstance::create(2, {{0, 0, 0}, {0, 1, 1}, {0, 0, 1}, {0, 1, 0}}, false);
  EXPECT_EQ(dm.max_degree(), 4);
  expect_error(ErrorKind::IndexOutOfRange, [] { DmInstance::create(1, {{0, 1, 0}}, true); });
}

TEST(DmInstanceTest, IsMatching) {
  const auto dm = DmInstance::create(2, {{0, 0, 0}, {0, 1, 1}, {1, 1, 1}}, true);
  EXPECT_TRUE(dm.is_matching(std::vector<int>{0, 2}));
  EXPECT_FALSE(dm.is_matching(std::vector<int>{0, 1}));
}

TEST(ChooseTest, SmallValues) {
  EXPECT_EQ(choose(5, 2), 10u);
  EXPECT_EQ(choose(8, 2), 28u);
  EXPECT_EQ(choose(2, 3), 0u);
  EXPECT_EQ(choose(12, 3), 220u);
}

}  // namespace
}  // namespace tristable
