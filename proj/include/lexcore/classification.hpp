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

#ifndef LEXCORE_CLASSIFICATION_HPP
#define LEXCORE_CLASSIFICATION_HPP

#include "lexcore/game.hpp"
#include "lexcore/matching.hpp"

#include <cstddef>
#include <vector>

namespace lexcore {

/// Matched in every / some but not every / no maximum-weight matching.
enum class Label { Essential, Viable, Subpar };

inline const char* to_string(Label label) {
  switch (label) {
    case Label::Essential: return "essential";
    case Label::Viable: return "viable";
    case Label::Subpar: return "subpar";
  }
  return "?";
}

struct Classification {
  std::vector<Label> left;
  std::vector<Label> right;
  std::vector<Label> edge;
  Rational worth;

  Label of(Vertex q) const { return q.side == Side::Left ? left.at(q.index) : right.at(q.index); }
  bool is_essential(Vertex q) const { return of(q) == Label::Essential; }

  /// U_e followed by V_e, each in index order.
  std::vector<Vertex> essential_vertices() const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < left.size(); ++i) {
      if (left[i] == Label::Essential) out.push_back(left_vertex(i));
    }
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (right[j] == Label::Essential) out.push_back(right_vertex(j));
    }
    return out;
  }
};

/// Labels every edge and vertex with m + n + (#non-essential edges) worth
/// queries:
///  - edge e is essential iff removing it lowers the worth;
///  - a non-essential edge (i, j) of weight w is viable iff deleting both
///    endpoints leaves exactly worth - w;
///  - vertex q is essential iff removing it lowers the worth, otherwise
///    viable when incident to a viable edge, otherwise subpar.
inline Classification classify(const AssignmentGame& game) {
  Classification c;
  c.worth = worth(game);
  const auto edges = game.edges();
  c.edge.assign(edges.size(), Label::Subpar);
  c.left.assign(game.left_size(), Label::Subpar);
  c.right.assign(game.right_size(), Label::Subpar);

  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (worth(game, {{}, {k}}) < c.worth) {
      c.edge[k] = Label::Essential;
      continue;
    }
    const Edge& e = edges[k];
    if (worth(game, {{left_vertex(e.u), right_vertex(e.v)}, {}}) == c.worth - e.weight) {
      c.edge[k] = Label::Viable;
    }
  }

  for (std::size_t i = 0; i < game.left_size(); ++i) {
    if (worth(game, {{left_vertex(i)}, {}}) < c.worth) c.left[i] = Label::Essential;
  }
  for (std::size_t j = 0; j < game.right_size(); ++j) {
    if (worth(game, {{right_vertex(j)}, {}}) < c.worth) c.right[j] = Label::Essential;
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (c.edge[k] != Label::Viable) continue;
    if (c.left[edges[k].u] != Label::Essential) c.left[edges[k].u] = Label::Viable;
    if (c.right[edges[k].v] != Label::Essential) c.right[edges[k].v] = Label::Viable;
  }
  return c;
}

/// True iff the maximum-weight matching is unique.
inline bool is_non_degenerate(const AssignmentGame& game, const Classification& c) {
  (void)game;
  auto viable = [](Label l) { return l == Label::Viable; };
  return std::none_of(c.edge.begin(), c.edge.end(), viable) &&
         std::none_of(c.left.begin(), c.left.end(), viable) &&
         std::none_of(c.right.begin(), c.right.end(), viable);
}

}  // namespace lexcore

#endif  // LEXCORE_CLASSIFICATION_HPP
