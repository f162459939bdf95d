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

#ifndef LEXCORE_MATCHING_HPP
#define LEXCORE_MATCHING_HPP

#include "lexcore/game.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

namespace lexcore {

struct Matching {
  /// Partner in V of each U vertex, and vice versa.
  std::vector<std::optional<std::size_t>> mate_left;
  std::vector<std::optional<std::size_t>> mate_right;
  Rational weight;

  /// Matched (u, v) pairs in increasing u order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < mate_left.size(); ++i) {
      if (mate_left[i]) out.emplace_back(i, *mate_left[i]);
    }
    return out;
  }

  bool is_matched(Vertex q) const {
    return q.side == Side::Left ? mate_left.at(q.index).has_value()
                                : mate_right.at(q.index).has_value();
  }
};

/// Vertices and edges deleted from the game before a worth computation.
struct WorthQuery {
  std::vector<Vertex> removed_vertices;
  std::vector<std::size_t> removed_edges;
};

namespace detail {

struct SubgraphMask {
  std::vector<bool> left_alive;
  std::vector<bool> right_alive;
  std::vector<bool> edge_alive;
};

inline SubgraphMask full_mask(const AssignmentGame& game) {
  return {std::vector<bool>(game.left_size(), true), std::vector<bool>(game.right_size(), true),
          std::vector<bool>(game.edges().size(), true)};
}

// Primal-dual maximum-weight matching. Left vertices are inserted one at a
// time with u = max incident weight; a Hungarian tree of tight edges is grown
// from the new vertex until it either reaches a free V vertex (augment) or
// some tree U vertex's dual drops to zero (that vertex is released). Between
// the two, duals move by the largest step keeping every edge feasible.
//
// Maintained throughout: u, v >= 0; u_i + v_j >= w_ij; matched edges tight;
// unmatched vertices carry zero dual.
inline std::pair<Matching, Imputation> solve_matching(const AssignmentGame& game,
                                                      const SubgraphMask& mask) {
  const std::size_t n_left = game.left_size();
  const std::size_t n_right = game.right_size();
  const auto edges = game.edges();

  std::vector<std::vector<std::size_t>> incident(n_left);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (mask.edge_alive[k] && mask.left_alive[e.u] && mask.right_alive[e.v]) {
      incident[e.u].push_back(k);
    }
  }

  Matching m;
  m.mate_left.assign(n_left, std::nullopt);
  m.mate_right.assign(n_right, std::nullopt);
  Imputation dual = Imputation::zeros(game);

  std::vector<bool> in_s(n_left);
  std::vector<bool> in_t(n_right);
  std::vector<std::size_t> pred(n_right);

  // Re-matches along the tree path ending at V vertex j (reached from pred[j])
  // back to the root.
  auto flip_from = [&](std::size_t j, std::size_t root) {
    while (true) {
      const std::size_t p = pred[j];
      const auto old = m.mate_left[p];
      m.mate_left[p] = j;
      m.mate_right[j] = p;
      if (p == root) break;
      j = *old;
    }
  };

  for (std::size_t root = 0; root < n_left; ++root) {
    if (incident[root].empty()) continue;
    Rational top = 0;
    for (std::size_t k : incident[root]) top = std::max(top, edges[k].weight);
    dual.u[root] = top;

    bool done = false;
    while (!done) {
      std::fill(in_s.begin(), in_s.end(), false);
      std::fill(in_t.begin(), in_t.end(), false);
      std::deque<std::size_t> queue{root};
      in_s[root] = true;
      std::optional<std::size_t> free_right;

      while (!queue.empty() && !free_right) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t k : incident[i]) {
          const Edge& e = edges[k];
          if (in_t[e.v] || dual.slack(e) != 0) continue;
          in_t[e.v] = true;
          pred[e.v] = i;
          if (!m.mate_right[e.v]) {
            free_right = e.v;
            break;
          }
          const std::size_t next = *m.mate_right[e.v];
          in_s[next] = true;
          queue.push_back(next);
        }
      }

      if (free_right) {
        flip_from(*free_right, root);
        done = true;
        continue;
      }

      std::optional<Rational> delta;
      std::optional<std::size_t> zero_left;
      for (std::size_t i = 0; i < n_left; ++i) {
        if (!in_s[i]) continue;
        if (!delta || dual.u[i] < *delta) {
          delta = dual.u[i];
          zero_left = i;
        }
      }
      for (std::size_t i = 0; i < n_left; ++i) {
        if (!in_s[i]) continue;
        for (std::size_t k : incident[i]) {
          const Edge& e = edges[k];
          if (in_t[e.v]) continue;
          const Rational s = dual.slack(e);
          if (s < *delta) {
            delta = s;
            zero_left.reset();
          }
        }
      }

      for (std::size_t i = 0; i < n_left; ++i) {
        if (in_s[i]) dual.u[i] -= *delta;
      }
      for (std::size_t j = 0; j < n_right; ++j) {
        if (in_t[j]) dual.v[j] += *delta;
      }

      if (zero_left) {
        // Release the zero-dual vertex and shift the matching toward the root.
        const std::size_t i = *zero_left;
        if (i != root) {
          const std::size_t j = *m.mate_left[i];
          m.mate_left[i].reset();
          m.mate_right[j].reset();
          flip_from(j, root);
        }
        done = true;
      }
    }
  }

  m.weight = 0;
  for (std::size_t i = 0; i < n_left; ++i) {
    if (!m.mate_left[i]) continue;
    m.weight += edges[*game.find_edge(i, *m.mate_left[i])].weight;
  }
  return {std::move(m), std::move(dual)};
}

}  // namespace detail

/// Maximum-weight matching together with an optimal dual (a core
/// imputation): feasible, non-negative, tight on matched edges, zero on
/// unmatched vertices, and summing to the matching weight.
inline std::pair<Matching, Imputation> max_weight_matching(const AssignmentGame& game) {
  return detail::solve_matching(game, detail::full_mask(game));
}

/// Worth of the sub-game left after deleting the query's vertices and edges.
inline Rational worth(const AssignmentGame& game, const WorthQuery& query = {}) {
  auto mask = detail::full_mask(game);
  for (Vertex q : query.removed_vertices) {
    (q.side == Side::Left ? mask.left_alive : mask.right_alive).at(q.index) = false;
  }
  for (std::size_t k : query.removed_edges) mask.edge_alive.at(k) = false;
  return detail::solve_matching(game, mask).first.weight;
}

}  // namespace lexcore

#endif  // LEXCORE_MATCHING_HPP
