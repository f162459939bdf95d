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

#ifndef LEXCORE_CORE_HPP
#define LEXCORE_CORE_HPP

#include "lexcore/classification.hpp"
#include "lexcore/game.hpp"
#include "lexcore/matching.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lexcore {

struct CoreCheckReport {
  bool is_core = false;
  std::vector<std::size_t> violated_edges;  // u_i + v_j < w_ij
  std::vector<Vertex> negative_vertices;
  Rational total_gap;  // worth - sum of profits
};

/// Core membership is dual feasibility plus optimality of the dual, so no
/// coalition enumeration is needed.
inline CoreCheckReport check_core(const AssignmentGame& game, const Imputation& imp,
                                  const Rational& game_worth) {
  if (imp.u.size() != game.left_size() || imp.v.size() != game.right_size()) {
    throw std::invalid_argument("imputation dimensions do not match the game");
  }
  CoreCheckReport r;
  const auto edges = game.edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (imp.slack(edges[k]) < 0) r.violated_edges.push_back(k);
  }
  for (std::size_t i = 0; i < imp.u.size(); ++i) {
    if (imp.u[i] < 0) r.negative_vertices.push_back(left_vertex(i));
  }
  for (std::size_t j = 0; j < imp.v.size(); ++j) {
    if (imp.v[j] < 0) r.negative_vertices.push_back(right_vertex(j));
  }
  r.total_gap = game_worth - imp.total();
  r.is_core = r.violated_edges.empty() && r.negative_vertices.empty() && r.total_gap == 0;
  return r;
}

inline CoreCheckReport check_core(const AssignmentGame& game, const Imputation& imp) {
  return check_core(game, imp, worth(game));
}

inline Imputation initial_core_imputation(const AssignmentGame& game) {
  return max_weight_matching(game).second;
}

namespace detail {

// Completes a U-side profit vector into a core point: v_j = w_ij - u_i on
// matched pairs, zero on unmatched V vertices.
inline Imputation complete_from_left(const AssignmentGame& game, const Matching& m,
                                     std::vector<Rational> u) {
  Imputation out{std::move(u), std::vector<Rational>(game.right_size())};
  for (auto [i, j] : m.pairs()) {
    out.v[j] = game.edge(*game.find_edge(i, j)).weight - out.u[i];
  }
  return out;
}

}  // namespace detail

struct ExtremeImputations {
  Imputation u_optimal;  // (u^h, v^l)
  Imputation v_optimal;  // (u^l, v^h)
};

/// Lattice extremes of the core. The highest core profit of a player is its
/// marginal contribution worth(G) - worth(G - q); the partner's profit on
/// the matched edge follows by tightness.
inline ExtremeImputations extreme_imputations(const AssignmentGame& game,
                                              const Classification& c) {
  const auto [m, dual] = max_weight_matching(game);
  (void)dual;
  std::vector<Rational> u_high(game.left_size());
  for (std::size_t i = 0; i < game.left_size(); ++i) {
    if (c.left[i] == Label::Essential) {
      u_high[i] = c.worth - worth(game, {{left_vertex(i)}, {}});
    }
  }
  std::vector<Rational> v_high(game.right_size());
  for (std::size_t j = 0; j < game.right_size(); ++j) {
    if (c.right[j] == Label::Essential) {
      v_high[j] = c.worth - worth(game, {{right_vertex(j)}, {}});
    }
  }

  ExtremeImputations out;
  out.u_optimal = detail::complete_from_left(game, m, std::move(u_high));
  Imputation v_opt{std::vector<Rational>(game.left_size()), std::move(v_high)};
  for (auto [i, j] : m.pairs()) {
    v_opt.u[i] = game.edge(*game.find_edge(i, j)).weight - v_opt.v[j];
  }
  out.v_optimal = std::move(v_opt);
  return out;
}

namespace detail {

template <typename Pick>
Imputation lattice_combine(const AssignmentGame& game, const Imputation& a, const Imputation& b,
                           Pick pick) {
  const auto [m, dual] = max_weight_matching(game);
  if (!check_core(game, a, m.weight).is_core || !check_core(game, b, m.weight).is_core) {
    throw std::invalid_argument("lattice operation requires core imputations");
  }
  std::vector<Rational> u(game.left_size());
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = pick(a.u[i], b.u[i]);
  return complete_from_left(game, m, std::move(u));
}

}  // namespace detail

/// Coordinatewise larger U profits (the U-favouring side of the lattice).
inline Imputation lattice_meet(const AssignmentGame& game, const Imputation& a,
                               const Imputation& b) {
  return detail::lattice_combine(game, a, b,
                                 [](const Rational& x, const Rational& y) { return std::max(x, y); });
}

/// Coordinatewise smaller U profits.
inline Imputation lattice_join(const AssignmentGame& game, const Imputation& a,
                               const Imputation& b) {
  return detail::lattice_combine(game, a, b,
                                 [](const Rational& x, const Rational& y) { return std::min(x, y); });
}

}  // namespace lexcore

#endif  // LEXCORE_CORE_HPP
