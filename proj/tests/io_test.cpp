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

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "tristable/generators.hpp"
#include "tristable/io.hpp"

namespace tristable::io {
namespace {

const Format kFormats[] = {Format::Text, Format::Json};

template <class T>
void expect_round_trip(const T& value) {
  for (Format f : kFormats) {
    const std::string doc = write_instance(value, f);
    EXPECT_EQ(parse_as<T>(doc), value) << doc;
    // Writing is deterministic.
    EXPECT_EQ(write_instance(parse_instance(doc), f), doc);
  }
}

TEST(InstanceIoTest, RoundTrips) {
  expect_round_trip(gen_gadget2());
  expect_round_trip(gen_random(3, 9));
  expect_round_trip(gen_random_psa(6, 2));
  expect_round_trip(gen_random_3dm_planted(4, 5, 1));
  expect_round_trip(DmInstance::create(3, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 1, 2}}, false));
  expect_round_trip(SatBFormula::create(3, 2, {{{0, false}, {2, true}}, {{1, true}}, {{0, true}, {1, false}, {2, false}}}));
}

TEST(InstanceIoTest, TextLayout) {
  const auto text = write_instance(gen_gadget2());
  EXPECT_EQ(text.substr(0, text.find('\n')), "3GSM 2");
  EXPECT_EQ(text.substr(text.find('\n') + 1, 7), "0 3 1 2");
  const auto dm = write_instance(DmInstance::create(2, {{0, 1, 1}}, true));
  EXPECT_EQ(dm, "3DM 2\n1 2 2\n");
  const auto sat = write_instance(SatBFormula::create(2, 1, {{{0, false}, {1, true}}}));
  EXPECT_EQ(sat, "3SATB 2 1 1\n1 -2\n");
}

TEST(InstanceIoTest, CommentsAndBlankLines) {
  const auto dm = parse_as<DmInstance>("# planted\n3DM 2\n\n1 1 1\n  # edge two\n2 2 2\n");
  EXPECT_EQ(dm.edge_count(), 2u);
  EXPECT_TRUE(dm.degree_bounded3());
}

TEST(InstanceIoTest, DegreeFlagIsInferred) {
  const auto dm = parse_as<DmInstance>("3DM 1\n1 1 1\n1 1 1\n1 1 1\n1 1 1\n");
  EXPECT_FALSE(dm.degree_bounded3());
  EXPECT_EQ(dm.max_degree(), 4);
}

TEST(InstanceIoTest, ParseErrors) {
  expect_error(ErrorKind::ParseError, [] { parse_instance(""); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("# only a comment\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("4GSM 2\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3GSM\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3GSM 1\n0\n0\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3GSM 1\n0\n0\n0\n0\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3GSM 1\n0 0\n0\n0\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3GSM 1\nx\n0\n0\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3DM 2\n1 2\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("3SATB 1 1 1\n0\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("{\"kind\": \"3DM\""); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("{\"kind\": \"4DM\"}"); });
  expect_error(ErrorKind::ParseError, [] { parse_instance("{\"kind\": \"3DM\", \"m\": 2}"); });
  expect_error(ErrorKind::ParseError, [] { parse_as<PsaInstance>("3DM 1\n1 1 1\n"); });
}

TEST(InstanceIoTest, ValidationErrorsPassThrough) {
  expect_error(ErrorKind::DuplicateRank, [] { parse_instance("3GSM 2\n0 0 1 2\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n0 1 2 3\n"); });
  expect_error(ErrorKind::IndexOutOfRange, [] { parse_instance("3DM 2\n1 3 1\n"); });
  expect_error(ErrorKind::PlayerCountNotMultipleOf3, [] { parse_instance("3PSA 4\n"); });
  expect_error(ErrorKind::OccurrenceBoundViolated, [] { parse_instance("3SATB 1 2 1\n1\n-1\n"); });
}

TEST(SolutionIoTest, Submarriage) {
  const auto s = Submarriage::from_families(3, {{0, 2, 1}, {2, 0, 0}});
  EXPECT_EQ(write_solution(s), "FAMILIES 3 2\n1 3 2\n3 1 1\n");
  for (Format f : kFormats) EXPECT_EQ(parse_submarriage(write_solution(s, f)), s);
  expect_error(ErrorKind::IndexOutOfRange, [] { parse_submarriage("FAMILIES 2 1\n1 3 1\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_submarriage("FAMILIES 2 2\n1 1 1\n"); });
  expect_error(ErrorKind::ParseError, [] { parse_submarriage("TRIPLES 3 1\n1 2 3\n"); });
}

TEST(SolutionIoTest, Submatching) {
  const auto s = Submatching::from_triples(6, {Triple::of(0, 4, 2), Triple::of(1, 3, 5)});
  for (Format f : kFormats) EXPECT_EQ(parse_submatching(write_solution(s, f)), s);
  expect_error(ErrorKind::IndexOutOfRange, [] { parse_submatching("TRIPLES 3 1\n1 2 4\n"); });
}

TEST(SolutionIoTest, MatchingAndAssignment) {
  const std::vector<int> m{0, 4, 7};
  EXPECT_EQ(write_matching(m), "MATCHING 3\n1\n5\n8\n");
  for (Format f : kFormats) EXPECT_EQ(parse_matching(write_matching(m, f)), m);
  expect_error(ErrorKind::ParseError, [] { parse_matching("MATCHING 2\n1\n"); });
  expect_error(ErrorKind::IndexOutOfRange, [] { parse_matching("MATCHING 1\n0\n"); });

  const std::vector<bool> a{true, false, false, true};
  EXPECT_EQ(write_assignment(a), "ASSIGNMENT 4\n1 -2 -3 4\n");
  for (Format f : kFormats) EXPECT_EQ(parse_assignment(write_assignment(a, f), 4), a);
  expect_error(ErrorKind::ParseError, [] { parse_assignment("ASSIGNMENT 2\n1 -1\n", 2); });
  expect_error(ErrorKind::DimensionMismatch, [] { parse_assignment("ASSIGNMENT 2\n1\n", 2); });
  expect_error(ErrorKind::IndexOutOfRange, [] { parse_assignment("ASSIGNMENT 2\n3 1\n", 2); });
}

TEST(LayoutIoTest, ListsEveryVertexAndEdge) {
  const auto f = SatBFormula::create(1, 1, {{{0, false}}});
  const auto red = sat_to_3dm3(f);
  const auto text = write_layout(red.layout);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_GE(lines, red.layout.vertices.size() + red.layout.edges.size());
  EXPECT_NE(text.find("ring-true"), std::string::npos);
  EXPECT_NE(text.find("s1[1]@1"), std::string::npos);
}

}  // namespace
}  // namespace tristable::io
