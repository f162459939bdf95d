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

#ifndef LEXCORE_GAME_HPP
#define LEXCORE_GAME_HPP

#include "lexcore/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace lexcore {

enum class Side { Left, Right };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

/// A player of the game: the index-th vertex of U (Left) or V (Right).
struct Vertex {
  Side side = Side::Left;
  std::size_t index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline Vertex left_vertex(std::size_t i) { return {Side::Left, i}; }
inline Vertex right_vertex(std::size_t j) { return {Side::Right, j}; }

inline std::string vertex_label(Vertex q) {
  return (q.side == Side::Left ? "u" : "v") + std::to_string(q.index + 1);
}

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class InvalidGame : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weighted bipartite graph G = (U, V, E) defining an assignment game.
///
/// Edges are kept sorted by (u, v); an edge's position in edges() is its
/// stable id throughout the library.
class AssignmentGame {
 public:
  AssignmentGame(std::size_t left_size, std::size_t right_size, std::vector<Edge> edges,
                 std::vector<std::string> left_names = {},
                 std::vector<std::string> right_names = {})
      : left_size_(left_size),
        right_size_(right_size),
        edges_(std::move(edges)),
        left_names_(std::move(left_names)),
        right_names_(std::move(right_names)) {
    if (edges_.empty()) {
      throw InvalidGame("game has no edges");
    }
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      const Edge& e = edges_[k];
      if (e.u >= left_size_ || e.v >= right_size_) {
        throw InvalidGame("edge " + std::to_string(k) + ": index out of range");
      }
      if (e.weight <= 0) {
        throw InvalidGame("edge " + std::to_string(k) + ": non-positive weight");
      }
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
      if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
        throw InvalidGame("duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                          std::to_string(edges_[k].v) + ")");
      }
    }
    if (!left_names_.empty() && left_names_.size() != left_size_) {
      throw InvalidGame("left names do not match left size");
    }
    if (!right_names_.empty() && right_names_.size() != right_size_) {
      throw InvalidGame("right names do not match right size");
    }
  }

  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }
  std::size_t vertex_count() const { return left_size_ + right_size_; }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::optional<std::size_t> find_edge(std::size_t u, std::size_t v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                               [](const Edge& e, const std::pair<std::size_t, std::size_t>& key) {
                                 return std::tie(e.u, e.v) < std::tie(key.first, key.second);
                               });
    if (it != edges_.end() && it->u == u && it->v == v) {
      return static_cast<std::size_t>(it - edges_.begin());
    }
    return std::nullopt;
  }

  const std::vector<std::string>& left_names() const { return left_names_; }
  const std::vector<std::string>& right_names() const { return right_names_; }

  std::string name_of(Vertex q) const {
    const auto& names = q.side == Side::Left ? left_names_ : right_names_;
    return names.empty() ? vertex_label(q) : names.at(q.index);
  }

  friend bool operator==(const AssignmentGame&, const AssignmentGame&) = default;

 private:
  std::size_t left_size_;
  std::size_t right_size_;
  std::vector<Edge> edges_;
  std::vector<std::string> left_names_;
  std::vector<std::string> right_names_;
};

/// Profit vectors (u, v). Also read as a dual solution of the matching LP.
struct Imputation {
  std::vector<Rational> u;
  std::vector<Rational> v;

  Imputation() = default;
  Imputation(std::vector<Rational> left, std::vector<Rational> right)
      : u(std::move(left)), v(std::move(right)) {}

  static Imputation zeros(const AssignmentGame& game) {
    return {std::vector<Rational>(game.left_size()), std::vector<Rational>(game.right_size())};
  }

  Rational& at(Vertex q) { return q.side == Side::Left ? u.at(q.index) : v.at(q.index); }
  const Rational& at(Vertex q) const { return q.side == Side::Left ? u.at(q.index) : v.at(q.index); }

  Rational total() const {
    Rational sum = 0;
    for (const auto& x : u) sum += x;
    for (const auto& x : v) sum += x;
    return sum;
  }

  /// u_i + v_j - w_ij for the given edge.
  Rational slack(const Edge& e) const { return u.at(e.u) + v.at(e.v) - e.weight; }

  friend bool operator==(const Imputation&, const Imputation&) = default;
};

enum class Objective { Leximin, Leximax };

inline const char* to_string(Objective mode) {
  return mode == Objective::Leximin ? "leximin" : "leximax";
}

/// Sorted profits of the essential players: ascending for leximin,
/// descending for leximax.
struct Profile {
  std::vector<Rational> values;
  Objective mode = Objective::Leximin;

  friend bool operator==(const Profile&, const Profile&) = default;
};

inline Profile profile_of(const Imputation& imputation, std::span<const Vertex> essential,
                          Objective mode) {
  Profile p;
  p.mode = mode;
  p.values.reserve(essential.size());
  for (Vertex q : essential) {
    p.values.push_back(imputation.at(q));
  }
  if (mode == Objective::Leximin) {
    std::sort(p.values.begin(), p.values.end());
  } else {
    std::sort(p.values.begin(), p.values.end(), std::greater<>());
  }
  return p;
}

/// Plain lexicographic comparison of the sorted lists. Under leximin a
/// greater result is the better imputation; under leximax it is the worse.
inline std::strong_ordering compare_profiles(const Profile& a, const Profile& b) {
  if (a.mode != b.mode) {
    throw std::invalid_argument("compare_profiles: mode mismatch");
  }
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("compare_profiles: length mismatch");
  }
  for (std::size_t k = 0; k < a.values.size(); ++k) {
    if (a.values[k] < b.values[k]) return std::strong_ordering::less;
    if (a.values[k] > b.values[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace lexcore

#endif  // LEXCORE_GAME_HPP
