// Copyright 2026 The lexcore Authors
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

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>

namespace lexcore {
namespace {

using testing::R;
using testing::Rs;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("70"), R(70));
  EXPECT_EQ(parse_rational("-3"), R(-3));
  EXPECT_EQ(parse_rational("10/4"), R(5, 2));
  EXPECT_THROW(parse_rational("1/0"), RationalFormatError);
  EXPECT_THROW(parse_rational("1/-2"), RationalFormatError);
  EXPECT_THROW(parse_rational("x"), RationalFormatError);
  EXPECT_THROW(parse_rational(""), RationalFormatError);
}

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(R(70)), "70");
  EXPECT_EQ(to_string(R(5, 2)), "5/2");
  EXPECT_EQ(to_string(R(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(R(0)), "0");
}

TEST(AssignmentGame, RejectsInvalidConstruction) {
  EXPECT_THROW(AssignmentGame(1, 1, {}), InvalidGame);
  EXPECT_THROW(AssignmentGame(1, 1, {{0, 0, R(0)}}), InvalidGame);
  EXPECT_THROW(AssignmentGame(1, 1, {{0, 1, R(1)}}), InvalidGame);
  EXPECT_THROW(AssignmentGame(1, 1, {{0, 0, R(1)}, {0, 0, R(2)}}), InvalidGame);
}

TEST(AssignmentGame, SortsEdgesCanonically) {
  const AssignmentGame g(2, 2, {{1, 0, R(3)}, {0, 1, R(2)}, {0, 0, R(1)}});
  ASSERT_EQ(g.edges().size(), 3u);
  EXPECT_EQ(g.edge(0).weight, R(1));
  EXPECT_EQ(g.edge(1).weight, R(2));
  EXPECT_EQ(g.edge(2).weight, R(3));
  EXPECT_EQ(g.find_edge(1, 0), 2u);
  EXPECT_FALSE(g.find_edge(1, 1).has_value());
}

TEST(ParseInstance, ReadsFixtures) {
  const auto k11 = parse_instance(R"({"left":1,"right":1,"edges":[{"u":0,"v":0,"w":10}]})");
  EXPECT_EQ(k11.left_size(), 1u);
  EXPECT_EQ(k11.right_size(), 1u);
  ASSERT_EQ(k11.edges().size(), 1u);
  EXPECT_EQ(k11.edge(0).weight, R(10));

  const auto ex2 = parse_instance(serialize_instance(testing::ex2()));
  EXPECT_EQ(ex2.left_size(), 2u);
  EXPECT_EQ(ex2.right_size(), 3u);
  EXPECT_EQ(ex2.edges().size(), 4u);
  EXPECT_EQ(ex2, testing::ex2());
}

TEST(ParseInstance, AcceptsNamesAndFractions) {
  const auto g = parse_instance(
      R"({"left":1,"right":2,"names":{"left":["ann"],"right":["x","y"]},)"
      R"("edges":[{"u":"ann","v":"y","w":"7/2"},{"u":0,"v":"x","w":1}]})");
  EXPECT_EQ(g.edge(*g.find_edge(0, 1)).weight, R(7, 2));
  EXPECT_EQ(g.name_of(right_vertex(1)), "y");
}

std::string parse_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseInstance, ReportsErrorsWithLocation) {
  EXPECT_EQ(parse_error(R"({"left":1,"right":1,"edges":[{"u":0,"v":0,"w":"0"}]})"),
            "edges[0].w: non-positive weight");
  EXPECT_EQ(parse_error(R"({"left":1,"right":1,"edges":[{"u":0,"v":0,"w":1},{"u":0,"v":0,"w":2}]})"),
            "edges[1]: duplicate edge (also edges[0])");
  EXPECT_EQ(parse_error(R"({"left":1,"right":1,"edges":[{"u":0,"v":3,"w":1}]})"),
            "edges[0].v: index out of range");
  EXPECT_NE(parse_error(R"({"left":1,"right":1,"edges":[)").find("malformed JSON"), std::string::npos);
  EXPECT_EQ(parse_error(R"({"left":1,"right":1,"edges":[]})"), "edges: game has no edges");
  EXPECT_EQ(parse_error(R"({"right":1,"edges":[]})"), "\"left\": expected a non-negative integer");
}

TEST(ParseInstance, RoundTripsRandomGames) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const auto g = testing::random_game(rng, {5, 30, 0.5});
    const std::string text = serialize_instance(g);
    const auto back = parse_instance(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_instance(back), text);
  }
}

TEST(ParseInstance, RoundTripsFractionalWeights) {
  const AssignmentGame g(1, 2, {{0, 0, R(7, 3)}, {0, 1, R(4)}});
  const std::string text = serialize_instance(g);
  EXPECT_EQ(text, R"({"left":1,"right":2,"edges":[{"u":0,"v":0,"w":"7/3"},{"u":0,"v":1,"w":4}]})" "\n");
  EXPECT_EQ(parse_instance(text), g);
}

TEST(Profile, SortsEssentialProfits) {
  const std::vector<Vertex> ess{left_vertex(0), left_vertex(1), right_vertex(0), right_vertex(1)};
  const auto p = profile_of(testing::imp({70, 30}, {30, 30, 0}), ess, Objective::Leximin);
  EXPECT_EQ(p.values, Rs({30, 30, 30, 70}));

  const std::vector<Vertex> both{left_vertex(0), right_vertex(0)};
  EXPECT_EQ(profile_of(testing::imp({5}, {5}), both, Objective::Leximin).values, Rs({5, 5}));

  const auto q = profile_of(testing::imp({55, 45}, {15, 55}), ess, Objective::Leximax);
  EXPECT_EQ(q.values, Rs({55, 55, 45, 15}));
}

TEST(Profile, InvariantUnderRelabeling) {
  const std::vector<Vertex> a{left_vertex(0), left_vertex(1), right_vertex(0)};
  const std::vector<Vertex> b{right_vertex(0), left_vertex(1), left_vertex(0)};
  const auto x = testing::imp({3, 1}, {2});
  EXPECT_EQ(profile_of(x, a, Objective::Leximin).values, profile_of(x, b, Objective::Leximin).values);
}

TEST(CompareProfiles, Examples) {
  const Profile ours{Rs({30, 30, 30, 70}), Objective::Leximin};
  const Profile other{Rs({20, 40, 40, 60}), Objective::Leximin};
  EXPECT_EQ(compare_profiles(ours, other), std::strong_ordering::greater);
  EXPECT_EQ(compare_profiles(other, ours), std::strong_ordering::less);
  EXPECT_EQ(compare_profiles(ours, ours), std::strong_ordering::equal);
  EXPECT_EQ(compare_profiles({Rs({30, 30, 40, 70}), Objective::Leximin}, {Rs({30, 30, 30, 80}), Objective::Leximin}),
            std::strong_ordering::greater);
}

TEST(CompareProfiles, RejectsMismatch) {
  EXPECT_THROW(compare_profiles({Rs({1}), Objective::Leximin}, {Rs({1}), Objective::Leximax}), std::invalid_argument);
  EXPECT_THROW(compare_profiles({Rs({1}), Objective::Leximin}, {Rs({1, 2}), Objective::Leximin}),
               std::invalid_argument);
}

TEST(CompareProfiles, IsATotalOrder) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(0, 6);
  std::uniform_int_distribution<int> den(1, 3);
  auto draw = [&] {
    std::vector<Rational> xs;
    for (int k = 0; k < 4; ++k) xs.push_back(R(num(rng), den(rng)));
    std::sort(xs.begin(), xs.end());
    return Profile{xs, Objective::Leximin};
  };
  for (int t = 0; t < 500; ++t) {
    const Profile a = draw(), b = draw(), c = draw();
    const auto ab = compare_profiles(a, b);
    EXPECT_EQ(compare_profiles(b, a), 0 <=> ab);
    EXPECT_EQ(ab == std::strong_ordering::equal, a.values == b.values);
    if (ab <= 0 && compare_profiles(b, c) <= 0) {
      EXPECT_TRUE(compare_profiles(a, c) <= 0);
    }
  }
}

}  // namespace
}  // namespace lexcore
