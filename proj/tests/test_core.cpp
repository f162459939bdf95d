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

namespace lexcore {
namespace {

using testing::imp;
using testing::R;

TEST(CheckCore, Ex2Imputations) {
  const auto g = testing::ex2();
  EXPECT_TRUE(check_core(g, testing::ex2_start()).is_core);
  EXPECT_TRUE(check_core(g, imp({70, 30}, {30, 30, 0})).is_core);

  const auto bad = check_core(g, imp({50, 10}, {50, 50, 0}));
  EXPECT_FALSE(bad.is_core);
  EXPECT_EQ(bad.violated_edges, std::vector<std::size_t>{*g.find_edge(0, 2)});
  EXPECT_TRUE(bad.negative_vertices.empty());
  EXPECT_EQ(bad.total_gap, 0);
}

TEST(CheckCore, ReportsNegativesAndGap) {
  const auto g = testing::k11();
  const auto neg = check_core(g, imp({11}, {-1}));
  EXPECT_FALSE(neg.is_core);
  EXPECT_EQ(neg.negative_vertices, std::vector<Vertex>{right_vertex(0)});
  const auto over = check_core(g, imp({6}, {6}));
  EXPECT_FALSE(over.is_core);
  EXPECT_EQ(over.total_gap, R(-2));
  EXPECT_THROW(check_core(g, imp({1, 2}, {3})), std::invalid_argument);
}

TEST(InitialCoreImputation, UniqueCoreFixtures) {
  EXPECT_EQ(initial_core_imputation(testing::ex_vb()), imp({60, 0}, {0, 40}));
  EXPECT_EQ(initial_core_imputation(testing::ex_vu()), imp({100}, {0, 0}));
  EXPECT_TRUE(check_core(testing::k11(), initial_core_imputation(testing::k11())).is_core);
}

TEST(InitialCoreImputation, AlwaysInCore) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_game(rng, {5, 12, 0.5});
    EXPECT_TRUE(check_core(g, initial_core_imputation(g)).is_core);
  }
}

TEST(ExtremeImputations, Fixtures) {
  {
    const auto g = testing::k11();
    const auto ex = extreme_imputations(g, classify(g));
    EXPECT_EQ(ex.u_optimal, imp({10}, {0}));
    EXPECT_EQ(ex.v_optimal, imp({0}, {10}));
  }
  {
    const auto g = testing::ex2();
    const auto ex = extreme_imputations(g, classify(g));
    EXPECT_EQ(ex.u_optimal, imp({100, 60}, {0, 0, 0}));
    EXPECT_EQ(ex.v_optimal, imp({60, 0}, {40, 60, 0}));
  }
  {
    const auto g = testing::ex_vb();
    const auto ex = extreme_imputations(g, classify(g));
    EXPECT_EQ(ex.u_optimal, imp({60, 0}, {0, 40}));
    EXPECT_EQ(ex.v_optimal, imp({60, 0}, {0, 40}));
  }
}

TEST(ExtremeImputations, DominateEveryGridCorePoint) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    const auto g = testing::random_game(rng, {3, 6, 0.6});
    const auto ex = extreme_imputations(g, classify(g));
    ASSERT_TRUE(check_core(g, ex.u_optimal).is_core);
    ASSERT_TRUE(check_core(g, ex.v_optimal).is_core);
    for (const auto& p : oracle::grid_core_points(g)) {
      for (std::size_t i = 0; i < g.left_size(); ++i) EXPECT_GE(ex.u_optimal.u[i], p.u[i]);
      for (std::size_t j = 0; j < g.right_size(); ++j) EXPECT_GE(ex.v_optimal.v[j], p.v[j]);
    }
  }
}

TEST(Lattice, Fixtures) {
  const auto k = testing::k11();
  EXPECT_EQ(lattice_meet(k, imp({10}, {0}), imp({0}, {10})), imp({10}, {0}));
  EXPECT_EQ(lattice_join(k, imp({10}, {0}), imp({0}, {10})), imp({0}, {10}));
  EXPECT_EQ(lattice_meet(k, imp({4}, {6}), imp({4}, {6})), imp({4}, {6}));

  const auto g = testing::ex2();
  const auto ex = extreme_imputations(g, classify(g));
  EXPECT_EQ(lattice_meet(g, ex.u_optimal, ex.v_optimal), ex.u_optimal);
  EXPECT_EQ(lattice_join(g, ex.u_optimal, ex.v_optimal), ex.v_optimal);
  EXPECT_THROW(lattice_meet(g, imp({50, 10}, {50, 50, 0}), ex.u_optimal), std::invalid_argument);
}

TEST(Lattice, AbsorptionAndDistributivityOnRandomTriples) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 80; ++t) {
    const auto g = testing::random_game(rng, {3, 6, 0.6});
    auto pts = oracle::grid_core_points(g);
    std::shuffle(pts.begin(), pts.end(), rng);
    if (pts.size() > 4) pts.resize(4);
    for (const auto& a : pts) {
      for (const auto& b : pts) {
        const auto m = lattice_meet(g, a, b);
        const auto j = lattice_join(g, a, b);
        EXPECT_TRUE(check_core(g, m).is_core);
        EXPECT_TRUE(check_core(g, j).is_core);
        EXPECT_EQ(lattice_meet(g, a, j), a);
        EXPECT_EQ(lattice_join(g, a, m), a);
        for (const auto& c : pts) {
          EXPECT_EQ(lattice_meet(g, a, lattice_join(g, b, c)),
                    lattice_join(g, lattice_meet(g, a, b), lattice_meet(g, a, c)));
        }
      }
    }
  }
}

TEST(CoreImputations, PayNothingToInessentialVertices) {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing::random_game(rng, {3, 6, 0.6});
    const auto c = classify(g);
    for (const auto& p : oracle::grid_core_points(g)) {
      for (std::size_t i = 0; i < g.left_size(); ++i) {
        if (!c.is_essential(left_vertex(i))) {
          EXPECT_EQ(p.u[i], 0);
        }
      }
      for (std::size_t j = 0; j < g.right_size(); ++j) {
        if (!c.is_essential(right_vertex(j))) {
          EXPECT_EQ(p.v[j], 0);
        }
      }
      for (std::size_t k = 0; k < g.edges().size(); ++k) {
        if (c.edge[k] != Label::Subpar) {
          EXPECT_EQ(p.slack(g.edge(k)), 0);
        }
      }
    }
  }
}

}  // namespace
}  // namespace lexcore
