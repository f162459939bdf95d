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

// Exhaustive ground truth for small games. Nothing here calls into the
// matching engine, the classifier or the mechanism: matchings are
// enumerated outright and the core is scanned on a fine grid.

#ifndef LEXCORE_ORACLE_HPP
#define LEXCORE_ORACLE_HPP

#include "lexcore/classification.hpp"
#include "lexcore/game.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lexcore::oracle {

inline constexpr std::size_t kMaxEdges = 16;
inline constexpr std::size_t kMaxEssential = 8;
inline constexpr std::uint64_t kMaxGridPoints = 20'000'000;

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumeratedMatching {
  std::vector<std::size_t> edges;  // edge ids
  Rational weight;
};

/// Every matching of the game, the empty one included.
inline std::vector<EnumeratedMatching> enumerate_matchings(const AssignmentGame& game) {
  if (game.edges().size() > kMaxEdges) {
    throw GuardExceeded("oracle: too many edges for enumeration");
  }
  std::vector<std::vector<std::size_t>> by_left(game.left_size());
  for (std::size_t k = 0; k < game.edges().size(); ++k) by_left[game.edge(k).u].push_back(k);

  std::vector<EnumeratedMatching> out;
  std::vector<bool> used(game.right_size());
  EnumeratedMatching current{{}, 0};
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == game.left_size()) {
      out.push_back(current);
      return;
    }
    visit(i + 1);
    for (std::size_t k : by_left[i]) {
      const Edge& e = game.edge(k);
      if (used[e.v]) continue;
      used[e.v] = true;
      current.edges.push_back(k);
      current.weight += e.weight;
      visit(i + 1);
      current.weight -= e.weight;
      current.edges.pop_back();
      used[e.v] = false;
    }
  };
  visit(0);
  return out;
}

/// Labels read off the set of all maximum-weight matchings.
inline Classification classify_by_enumeration(const AssignmentGame& game) {
  const auto all = enumerate_matchings(game);
  Rational best = 0;
  for (const auto& m : all) best = std::max(best, m.weight);

  const std::size_t ne = game.edges().size();
  std::vector<std::size_t> edge_hits(ne);
  std::vector<std::size_t> left_hits(game.left_size());
  std::vector<std::size_t> right_hits(game.right_size());
  std::size_t maxima = 0;
  for (const auto& m : all) {
    if (m.weight != best) continue;
    ++maxima;
    for (std::size_t k : m.edges) {
      ++edge_hits[k];
      ++left_hits[game.edge(k).u];
      ++right_hits[game.edge(k).v];
    }
  }
  auto label = [maxima](std::size_t hits) {
    if (hits == maxima) return Label::Essential;
    return hits > 0 ? Label::Viable : Label::Subpar;
  };
  Classification c;
  c.worth = best;
  for (auto h : edge_hits) c.edge.push_back(label(h));
  for (auto h : left_hits) c.left.push_back(label(h));
  for (auto h : right_hits) c.right.push_back(label(h));
  return c;
}

struct GridOptions {
  /// Grid points per unit of the integer-rescaled weights.
  std::int64_t resolution = 2;
  /// Pin non-essential U profits to zero instead of scanning them.
  bool prune = true;
};

namespace detail {

struct ScaledGame {
  BigInt scale;  // common denominator of the weights times the resolution
  std::vector<std::vector<std::int64_t>> w;  // w[i][j], 0 where there is no edge
  std::int64_t worth = 0;
};

inline ScaledGame rescale(const AssignmentGame& game, const Rational& worth, std::int64_t resolution) {
  BigInt lcm = 1;
  for (const Edge& e : game.edges()) {
    const BigInt d = denominator_of(e.weight);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  ScaledGame s;
  s.scale = lcm * resolution;
  s.w.assign(game.left_size(), std::vector<std::int64_t>(game.right_size(), 0));
  const Rational limit = Rational(std::numeric_limits<std::int64_t>::max() / 64);
  for (const Edge& e : game.edges()) {
    const Rational x = e.weight * Rational(s.scale);
    if (x > limit) throw GuardExceeded("oracle: weights too large");
    s.w[e.u][e.v] = static_cast<std::int64_t>(boost::multiprecision::numerator(x));
  }
  s.worth = static_cast<std::int64_t>(boost::multiprecision::numerator(worth * Rational(s.scale)));
  return s;
}

// Visits every core point whose U coordinates lie on the grid. For fixed u
// the cheapest feasible v is v_j = max(0, max_i w_ij - u_i); u extends to a
// core point iff that v brings the total down to the worth.
template <typename Visit>
void scan_grid(const AssignmentGame& game, const Classification& labels, const GridOptions& opts,
               Visit&& visit) {
  const ScaledGame s = rescale(game, labels.worth, opts.resolution);
  const std::size_t nl = game.left_size();
  const std::size_t nr = game.right_size();

  std::vector<std::int64_t> top(nl, 0);
  std::uint64_t points = 1;
  for (std::size_t i = 0; i < nl; ++i) {
    if (opts.prune && labels.left[i] != Label::Essential) continue;
    for (std::size_t j = 0; j < nr; ++j) top[i] = std::max(top[i], s.w[i][j]);
    points *= static_cast<std::uint64_t>(top[i] + 1);
    if (points > kMaxGridPoints) throw GuardExceeded("oracle: grid too large");
  }

  std::vector<std::int64_t> u(nl, 0);
  std::vector<std::int64_t> v(nr, 0);
  while (true) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < nl; ++i) total += u[i];
    for (std::size_t j = 0; j < nr; ++j) {
      std::int64_t need = 0;
      for (std::size_t i = 0; i < nl; ++i) {
        if (s.w[i][j] > 0) need = std::max(need, s.w[i][j] - u[i]);
      }
      v[j] = need;
      total += need;
    }
    if (total == s.worth) visit(u, v, s.scale);

    std::size_t i = 0;
    for (; i < nl; ++i) {
      if (u[i] < top[i]) {
        ++u[i];
        break;
      }
      u[i] = 0;
    }
    if (i == nl) break;
  }
}

inline Imputation to_imputation(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v,
                                const BigInt& scale) {
  Imputation out;
  for (auto x : u) out.u.emplace_back(BigInt(x), scale);
  for (auto x : v) out.v.emplace_back(BigInt(x), scale);
  return out;
}

inline std::vector<std::int64_t> sorted_essential(const Classification& labels,
                                                  const std::vector<std::int64_t>& u,
                                                  const std::vector<std::int64_t>& v, Objective mode) {
  std::vector<std::int64_t> p;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (labels.left[i] == Label::Essential) p.push_back(u[i]);
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (labels.right[j] == Label::Essential) p.push_back(v[j]);
  }
  if (mode == Objective::Leximin) {
    std::sort(p.begin(), p.end());
  } else {
    std::sort(p.begin(), p.end(), std::greater<>());
  }
  return p;
}

inline void check_essential_guard(const Classification& labels) {
  std::size_t n = 0;
  for (auto l : labels.left) n += l == Label::Essential;
  for (auto l : labels.right) n += l == Label::Essential;
  if (n > kMaxEssential) throw GuardExceeded("oracle: too many essential players");
}

}  // namespace detail

/// All grid points of the core (spacing 1/resolution of the rescaled weights).
inline std::vector<Imputation> grid_core_points(const AssignmentGame& game, GridOptions opts = {}) {
  const Classification labels = classify_by_enumeration(game);
  detail::check_essential_guard(labels);
  std::vector<Imputation> out;
  detail::scan_grid(game, labels, opts, [&](const auto& u, const auto& v, const BigInt& scale) {
    out.push_back(detail::to_imputation(u, v, scale));
  });
  return out;
}

/// The grid core point with the lexicographically best sorted essential
/// profile: largest ascending list (leximin) or smallest descending list
/// (leximax).
inline Imputation lexicographic_optimum(const AssignmentGame& game, Objective mode,
                                        GridOptions opts = {}) {
  const Classification labels = classify_by_enumeration(game);
  detail::check_essential_guard(labels);
  std::optional<std::vector<std::int64_t>> best_profile;
  std::vector<std::int64_t> best_u;
  std::vector<std::int64_t> best_v;
  BigInt best_scale = 1;
  bool tie = false;
  detail::scan_grid(game, labels, opts, [&](const auto& u, const auto& v, const BigInt& scale) {
    auto p = detail::sorted_essential(labels, u, v, mode);
    const bool better = !best_profile || (mode == Objective::Leximin ? p > *best_profile
                                                                     : p < *best_profile);
    if (better) {
      best_profile = std::move(p);
      best_u = u;
      best_v = v;
      best_scale = scale;
      tie = false;
    } else if (p == *best_profile) {
      tie = true;
    }
  });
  if (!best_profile) throw std::logic_error("oracle: no core point on the grid");
  if (tie) throw std::logic_error("oracle: optimum is not unique on the grid");
  return detail::to_imputation(best_u, best_v, best_scale);
}

inline Imputation oracle_leximin(const AssignmentGame& game, GridOptions opts = {}) {
  return lexicographic_optimum(game, Objective::Leximin, opts);
}

inline Imputation oracle_leximax(const AssignmentGame& game, GridOptions opts = {}) {
  return lexicographic_optimum(game, Objective::Leximax, opts);
}

struct OracleExtremes {
  Imputation u_optimal;
  Imputation v_optimal;
};

/// Grid core points maximizing total U profit and total V profit.
inline OracleExtremes oracle_extremes(const AssignmentGame& game, GridOptions opts = {}) {
  const Classification labels = classify_by_enumeration(game);
  detail::check_essential_guard(labels);
  std::optional<std::int64_t> best_left;
  std::optional<std::int64_t> best_right;
  OracleExtremes out;
  detail::scan_grid(game, labels, opts, [&](const auto& u, const auto& v, const BigInt& scale) {
    std::int64_t su = 0;
    std::int64_t sv = 0;
    for (auto x : u) su += x;
    for (auto x : v) sv += x;
    if (!best_left || su > *best_left) {
      best_left = su;
      out.u_optimal = detail::to_imputation(u, v, scale);
    }
    if (!best_right || sv > *best_right) {
      best_right = sv;
      out.v_optimal = detail::to_imputation(u, v, scale);
    }
  });
  if (!best_left) throw std::logic_error("oracle: no core point on the grid");
  return out;
}

/// True when the oracle's guards admit the game.
inline bool within_guards(const AssignmentGame& game) {
  try {
    if (game.edges().size() > kMaxEdges) return false;
    const Classification labels = classify_by_enumeration(game);
    detail::check_essential_guard(labels);
    std::uint64_t points = 1;
    const auto s = detail::rescale(game, labels.worth, 2);
    for (std::size_t i = 0; i < game.left_size(); ++i) {
      if (labels.left[i] != Label::Essential) continue;
      std::int64_t top = 0;
      for (auto x : s.w[i]) top = std::max(top, x);
      points *= static_cast<std::uint64_t>(top + 1);
      if (points > kMaxGridPoints) return false;
    }
    return true;
  } catch (const GuardExceeded&) {
    return false;
  }
}

}  // namespace lexcore::oracle

#endif  // LEXCORE_ORACLE_HPP
