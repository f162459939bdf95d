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

#ifndef LEXCORE_TESTS_SUPPORT_HPP
#define LEXCORE_TESTS_SUPPORT_HPP

#include "lexcore/lexcore.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace lexcore::testing {

inline Rational R(long long n, long long d = 1) { return Rational(n) / Rational(d); }

inline std::vector<Rational> Rs(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(R(x));
  return out;
}

inline Imputation imp(std::initializer_list<long long> u, std::initializer_list<long long> v) {
  return {Rs(u), Rs(v)};
}

inline AssignmentGame k11() { return AssignmentGame(1, 1, {{0, 0, R(10)}}); }

inline AssignmentGame ex_sub() { return AssignmentGame(1, 2, {{0, 0, R(100)}, {0, 1, R(60)}}); }

inline AssignmentGame ex_vu() { return AssignmentGame(1, 2, {{0, 0, R(100)}, {0, 1, R(100)}}); }

inline AssignmentGame ex_vb() {
  return AssignmentGame(2, 2, {{0, 0, R(60)}, {0, 1, R(100)}, {1, 1, R(40)}});
}

inline AssignmentGame ex2() {
  return AssignmentGame(2, 3, {{0, 0, R(100)}, {0, 1, R(100)}, {0, 2, R(60)}, {1, 1, R(60)}});
}

/// Two crossing pairs where the leximax run drives a decreasing profit to zero.
inline AssignmentGame ex_floor() {
  return AssignmentGame(2, 2, {{0, 0, R(10)}, {1, 1, R(2)}, {0, 1, R(11)}, {1, 0, R(1)}});
}

inline Imputation ex2_start() { return imp({60, 10}, {40, 50, 0}); }

struct RandomGameSpec {
  std::size_t max_side = 4;
  int max_weight = 8;
  double edge_probability = 0.6;
};

/// Independent edges with uniform integer weights; empty draws are redrawn.
inline AssignmentGame random_game(std::mt19937_64& rng, const RandomGameSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> side(1, spec.max_side);
  std::uniform_int_distribution<int> weight(1, spec.max_weight);
  std::bernoulli_distribution present(spec.edge_probability);
  for (;;) {
    const std::size_t nl = side(rng);
    const std::size_t nr = side(rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < nl; ++i) {
      for (std::size_t j = 0; j < nr; ++j) {
        if (present(rng)) edges.push_back({i, j, R(weight(rng))});
      }
    }
    if (!edges.empty()) return AssignmentGame(nl, nr, std::move(edges));
  }
}

struct Relabeling {
  std::vector<std::size_t> left;   // old index -> new index
  std::vector<std::size_t> right;
};

inline Relabeling random_relabeling(const AssignmentGame& game, std::mt19937_64& rng) {
  Relabeling p;
  p.left.resize(game.left_size());
  p.right.resize(game.right_size());
  std::iota(p.left.begin(), p.left.end(), 0);
  std::iota(p.right.begin(), p.right.end(), 0);
  std::shuffle(p.left.begin(), p.left.end(), rng);
  std::shuffle(p.right.begin(), p.right.end(), rng);
  return p;
}

inline AssignmentGame relabel(const AssignmentGame& game, const Relabeling& p) {
  std::vector<Edge> edges;
  for (const Edge& e : game.edges()) edges.push_back({p.left[e.u], p.right[e.v], e.weight});
  return AssignmentGame(game.left_size(), game.right_size(), std::move(edges));
}

/// Maps an imputation of the relabeled game back to the original labels.
inline Imputation unrelabel(const Imputation& x, const Relabeling& p) {
  Imputation out{std::vector<Rational>(p.left.size()), std::vector<Rational>(p.right.size())};
  for (std::size_t i = 0; i < p.left.size(); ++i) out.u[i] = x.u[p.left[i]];
  for (std::size_t j = 0; j < p.right.size(); ++j) out.v[j] = x.v[p.right[j]];
  return out;
}

}  // namespace lexcore::testing

#endif  // LEXCORE_TESTS_SUPPORT_HPP
