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

#ifndef LEXCORE_MECHANISM_HPP
#define LEXCORE_MECHANISM_HPP

#include "lexcore/classification.hpp"
#include "lexcore/core.hpp"
#include "lexcore/game.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lexcore {

/// Clockwise raises every left(C) profit and lowers every right(C) profit at
/// unit rate; anticlockwise is the reverse.
enum class Rotation { Clockwise, Anticlockwise };

inline Side increasing_side(Rotation r) { return r == Rotation::Clockwise ? Side::Left : Side::Right; }
inline Side decreasing_side(Rotation r) { return opposite(increasing_side(r)); }

enum class Location { Bin, Active, Frozen, FullyRepaired };

inline const char* to_string(Location loc) {
  switch (loc) {
    case Location::Bin: return "bin";
    case Location::Active: return "active";
    case Location::Frozen: return "frozen";
    case Location::FullyRepaired: return "fully_repaired";
  }
  return "?";
}

enum class EventKind { Activation, FullyRepaired, LegitimateEdge, FloorReached, Termination };

inline const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Activation: return "ACTIVATION";
    case EventKind::FullyRepaired: return "FULLY_REPAIRED";
    case EventKind::LegitimateEdge: return "LEGITIMATE_EDGE";
    case EventKind::FloorReached: return "FLOOR_REACHED";
    case EventKind::Termination: return "TERMINATION";
  }
  return "?";
}

/// Where the far endpoint of a legitimate edge lives.
enum class EdgeCase { ToBin, ToActive, ToFrozen, ToFullyRepaired };

inline const char* to_string(EdgeCase c) {
  switch (c) {
    case EdgeCase::ToBin: return "TO_BIN";
    case EdgeCase::ToActive: return "TO_ACTIVE";
    case EdgeCase::ToFrozen: return "TO_FROZEN";
    case EdgeCase::ToFullyRepaired: return "TO_FULLY_REPAIRED";
  }
  return "?";
}

struct Event {
  Rational omega;
  EventKind kind = EventKind::Termination;
  /// Activation: the component. FullyRepaired / FloorReached: root of the
  /// valid component. LegitimateEdge: root of the active side.
  std::vector<std::size_t> components;
  std::optional<std::size_t> edge;
  std::optional<EdgeCase> edge_case;
  std::optional<Vertex> vertex;  // FloorReached only
  /// Filled in when the event is applied.
  std::vector<std::size_t> kept;
  std::vector<std::size_t> released;
};

struct Trace {
  std::vector<Event> events;
  std::vector<Imputation> snapshots;  // profits after each event, when requested
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Connected component of the starting tight subgraph whose vertices are
/// all essential. The partition into these never changes during a run.
struct FundamentalComponent {
  std::vector<Vertex> vertices;
  std::vector<std::size_t> edges;
};

/// A tree of fundamental components joined by legitimate edges, rotating
/// as one. Each non-root member records its parent and the joining edge.
struct ValidComponent {
  std::size_t root = 0;
  Rotation rotation = Rotation::Clockwise;
  std::vector<std::size_t> members;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;
};

struct LegitimateEdge {
  std::size_t edge = 0;
  std::size_t active_root = 0;
  EdgeCase edge_case = EdgeCase::ToBin;
};

struct MechanismOptions {
  bool snapshots = false;
  bool check_invariants = false;
};

class MechanismState;

using EventObserver = std::function<void(const MechanismState&, const Event&)>;

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Event-driven state of the leximin / leximax mechanism.
///
/// The clock omega moves at unit rate (up for leximin, down for leximax).
/// Every active valid component rotates so that its extreme essential profit
/// tracks omega; the rotation stops on one of four events:
///  - a Bin component's extreme reaches omega (activation);
///  - an active component gets its extreme on both sides (fully repaired);
///  - a subpar edge at a decreasing vertex goes tight (legitimate edge);
///  - a decreasing profit reaches zero (floor; only possible for leximax).
/// Time is advanced in closed-form jumps between events.
class MechanismState {
 public:
  static MechanismState initialize(const AssignmentGame& game, const Classification& classification,
                                   const Imputation& initial, Objective mode,
                                   const MechanismOptions& options = {},
                                   EventObserver observer = {}) {
    MechanismState s(game, classification, initial, mode);
    s.snapshots_ = options.snapshots;
    s.check_invariants_ = options.check_invariants;
    s.observer_ = std::move(observer);
    s.build_components();
    s.init_omega();
    s.cascade();
    return s;
  }

  Objective mode() const { return mode_; }
  const Rational& omega() const { return omega_; }
  const Imputation& imputation() const { return imputation_; }
  const AssignmentGame& game() const { return game_; }
  const Classification& classification() const { return classification_; }
  const Trace& trace() const { return trace_; }
  Trace& trace() { return trace_; }

  const std::vector<bool>& tight_set() const { return in_tight_; }
  std::size_t component_count() const { return components_.size(); }
  const FundamentalComponent& component(std::size_t c) const { return components_.at(c); }
  Location location(std::size_t c) const { return location_.at(c); }
  const std::map<std::size_t, ValidComponent>& active() const { return active_; }

  /// Fundamental component containing q, if any.
  std::optional<std::size_t> component_of(Vertex q) const {
    return q.side == Side::Left ? left_comp_.at(q.index) : right_comp_.at(q.index);
  }

  bool finished() const {
    return std::none_of(location_.begin(), location_.end(), [](Location l) {
      return l == Location::Bin || l == Location::Active;
    });
  }

  /// Smallest essential profit of a component (largest, for leximax).
  Rational extreme(std::size_t c) const {
    Rational best = imputation_.at(components_[c].vertices.front());
    for (Vertex q : components_[c].vertices) {
      const Rational& x = imputation_.at(q);
      if (mode_ == Objective::Leximin ? x < best : x > best) best = x;
    }
    return best;
  }

  /// Profit rate of q under the current rotations: +1, -1 or 0.
  int rate(Vertex q) const {
    const auto c = component_of(q);
    if (!c || location_[*c] != Location::Active) return 0;
    const Rotation r = active_.at(owner_[*c]).rotation;
    return q.side == increasing_side(r) ? 1 : -1;
  }

  std::vector<LegitimateEdge> find_legitimate_edges() const {
    std::vector<LegitimateEdge> out;
    const auto edges = game_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (in_tight_[k] || closing_rate(k) <= 0 || imputation_.slack(edges[k]) != 0) continue;
      out.push_back(describe_edge(k));
    }
    return out;
  }

  /// Earliest next event and the clock distance to it. Simultaneous events
  /// are ordered fully-repaired, legitimate edge, floor, activation; ties
  /// within a kind go to the smallest id.
  std::pair<Rational, Event> next_event() const {
    if (finished()) {
      throw InvariantViolation("next_event called on a finished mechanism");
    }
    struct Candidate {
      Rational delta;
      int rank;
      std::size_t id;
      Event event;
    };
    std::optional<Candidate> best;
    auto offer = [&](Rational delta, int rank, std::size_t id, Event ev) {
      if (!best || delta < best->delta || (delta == best->delta && std::pair{rank, id} < std::pair{best->rank, best->id})) {
        best = Candidate{std::move(delta), rank, id, std::move(ev)};
      }
    };

    for (const auto& [root, d] : active_) {
      const Side trail = trail_side(d.rotation);
      std::optional<Rational> gap;
      for (std::size_t c : d.members) {
        for (Vertex q : components_[c].vertices) {
          if (q.side != trail) continue;
          const Rational g = distance(imputation_.at(q));
          if (!gap || g < *gap) gap = g;
        }
      }
      if (gap) {
        Event ev;
        ev.kind = EventKind::FullyRepaired;
        ev.components = {root};
        offer(*gap / 2, 0, root, std::move(ev));
      }
    }

    const auto edges = game_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (in_tight_[k]) continue;
      const int closing = closing_rate(k);
      if (closing <= 0) continue;
      const Rational slack = imputation_.slack(edges[k]);
      const LegitimateEdge le = describe_edge(k);
      Event ev;
      ev.kind = EventKind::LegitimateEdge;
      ev.components = {le.active_root};
      ev.edge = k;
      ev.edge_case = le.edge_case;
      offer(slack / closing, 1, k, std::move(ev));
    }

    for (const auto& [root, d] : active_) {
      const Side down = decreasing_side(d.rotation);
      for (std::size_t c : d.members) {
        for (Vertex q : components_[c].vertices) {
          if (q.side != down) continue;
          Event ev;
          ev.kind = EventKind::FloorReached;
          ev.components = {root};
          ev.vertex = q;
          offer(imputation_.at(q), 2, root, std::move(ev));
        }
      }
    }

    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (location_[c] != Location::Bin) continue;
      Event ev;
      ev.kind = EventKind::Activation;
      ev.components = {c};
      offer(distance(extreme(c)), 3, c, std::move(ev));
    }

    if (!best) {
      throw InvariantViolation("no pending event although Bin or Active is nonempty");
    }
    best->event.omega = omega_ + sign() * best->delta;
    return {best->delta, std::move(best->event)};
  }

  /// Advances the clock to event.omega (rotating all active components on
  /// the way) and executes the event. Returns the event with its kept and
  /// released component lists filled in.
  Event apply_event(Event event) {
    const Rational delta = distance(event.omega);
    if (delta < 0) throw InvariantViolation("event lies in the past");
    advance(delta);
    switch (event.kind) {
      case EventKind::Activation: apply_activation(event); break;
      case EventKind::FullyRepaired: apply_fully_repaired(event); break;
      case EventKind::LegitimateEdge: apply_legitimate(event); break;
      case EventKind::FloorReached: apply_floor(event); break;
      case EventKind::Termination: throw InvariantViolation("termination is not applicable");
    }
    record(event);
    return event;
  }

  /// Runs the event loop to completion and appends the termination event.
  void run_to_completion(std::size_t max_events) {
    while (!finished()) {
      if (trace_.events.size() >= max_events) {
        throw InvariantViolation("event budget exhausted");
      }
      auto [delta, ev] = next_event();
      (void)delta;
      apply_event(std::move(ev));
    }
    Event done;
    done.kind = EventKind::Termination;
    done.omega = omega_;
    record(done);
  }

  /// Valid-component extraction. Keeps, for every member in `targets`, the
  /// tree path from the root down to it; returns the kept set in member
  /// order.
  std::vector<std::size_t> paths_to(const ValidComponent& d,
                                    const std::vector<std::size_t>& targets) const {
    std::set<std::size_t> keep;
    for (std::size_t t : targets) {
      std::size_t c = t;
      while (keep.insert(c).second) {
        auto it = d.parent.find(c);
        if (it == d.parent.end()) break;
        c = it->second.first;
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t c : d.members) {
      if (keep.count(c)) out.push_back(c);
    }
    return out;
  }

  /// Minimum fully repaired sub-component of an active component whose
  /// extreme is attained on both sides: the root plus every member with an
  /// extreme-valued vertex on the trailing side, plus the members between.
  std::vector<std::size_t> min_sub_fully_repaired(const ValidComponent& d) const {
    const Side trail = trail_side(d.rotation);
    std::vector<std::size_t> targets;
    for (std::size_t c : d.members) {
      for (Vertex q : components_[c].vertices) {
        if (q.side == trail && imputation_.at(q) == omega_) {
          targets.push_back(c);
          break;
        }
      }
    }
    if (targets.empty()) throw InvariantViolation("fully repaired without a trailing extreme");
    return paths_to(d, targets);
  }

  /// Every violated invariant, as human-readable strings.
  std::vector<std::string> invariant_violations() const {
    std::vector<std::string> out;
    const auto report = check_core(game_, imputation_, classification_.worth);
    if (!report.is_core) out.push_back("imputation left the core");
    const auto edges = game_.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (in_tight_[k] && imputation_.slack(edges[k]) != 0) {
        out.push_back("edge " + std::to_string(k) + " in T is not tight");
      }
    }
    for (std::size_t c = 0; c < components_.size(); ++c) {
      if (location_[c] != Location::Bin && location_[c] != Location::Active) continue;
      if (distance(extreme(c)) < 0) {
        out.push_back("component " + std::to_string(c) + " is behind omega");
      }
    }
    for (const auto& [root, d] : active_) {
      Rational e = extreme(d.members.front());
      for (std::size_t c : d.members) {
        const Rational x = extreme(c);
        if (mode_ == Objective::Leximin ? x < e : x > e) e = x;
      }
      if (e != omega_) out.push_back("active component " + std::to_string(root) + " is off omega");
    }
    return out;
  }

 private:
  MechanismState(const AssignmentGame& game, const Classification& classification,
                 const Imputation& initial, Objective mode)
      : game_(game), classification_(classification), mode_(mode), imputation_(initial) {
    const auto report = check_core(game_, imputation_, classification_.worth);
    if (!report.is_core) {
      throw std::invalid_argument("initial imputation is not in the core");
    }
  }

  int sign() const { return mode_ == Objective::Leximin ? 1 : -1; }

  // How far a profit is from the clock in the direction the clock moves.
  Rational distance(const Rational& x) const { return sign() * (x - omega_); }

  // The side carrying the extreme moves with the clock; the other side
  // (the trailing side) moves toward it.
  Side lead_side(Rotation r) const {
    return mode_ == Objective::Leximin ? increasing_side(r) : decreasing_side(r);
  }
  Side trail_side(Rotation r) const { return opposite(lead_side(r)); }

  Rotation rotation_for_lead(Side lead) const {
    const bool left_up = (lead == Side::Left) == (mode_ == Objective::Leximin);
    return left_up ? Rotation::Clockwise : Rotation::Anticlockwise;
  }

  // Rate at which the slack of edge k shrinks.
  int closing_rate(std::size_t k) const {
    const Edge& e = game_.edge(k);
    return -(rate(left_vertex(e.u)) + rate(right_vertex(e.v)));
  }

  LegitimateEdge describe_edge(std::size_t k) const {
    const Edge& e = game_.edge(k);
    const Vertex a = left_vertex(e.u);
    const Vertex b = right_vertex(e.v);
    const bool a_down = rate(a) < 0;
    const bool b_down = rate(b) < 0;
    LegitimateEdge le;
    le.edge = k;
    if (a_down && b_down) {
      le.active_root = std::min(owner_[*component_of(a)], owner_[*component_of(b)]);
      le.edge_case = EdgeCase::ToActive;
      return le;
    }
    const Vertex here = a_down ? a : b;
    const Vertex there = a_down ? b : a;
    le.active_root = owner_[*component_of(here)];
    const auto other = component_of(there);
    if (!other) {
      le.edge_case = EdgeCase::ToFrozen;
    } else {
      switch (location_[*other]) {
        case Location::Bin: le.edge_case = EdgeCase::ToBin; break;
        case Location::Frozen: le.edge_case = EdgeCase::ToFrozen; break;
        case Location::FullyRepaired: le.edge_case = EdgeCase::ToFullyRepaired; break;
        case Location::Active: le.edge_case = EdgeCase::ToActive; break;
      }
    }
    return le;
  }

  void build_components() {
    const std::size_t nl = game_.left_size();
    const std::size_t n = game_.vertex_count();
    auto vertex_at = [nl](std::size_t x) { return x < nl ? left_vertex(x) : right_vertex(x - nl); };

    const auto edges = game_.edges();
    in_tight_.assign(edges.size(), false);
    detail::DisjointSets sets(n);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (classification_.edge[k] == Label::Subpar) continue;
      in_tight_[k] = true;
      sets.unite(edges[k].u, nl + edges[k].v);
    }

    std::map<std::size_t, std::vector<Vertex>> groups;
    for (std::size_t x = 0; x < n; ++x) groups[sets.find(x)].push_back(vertex_at(x));

    left_comp_.assign(nl, std::nullopt);
    right_comp_.assign(game_.right_size(), std::nullopt);
    for (auto& [rep, members] : groups) {
      const bool fundamental = std::all_of(members.begin(), members.end(), [&](Vertex q) {
        return classification_.is_essential(q);
      });
      if (!fundamental) {
        frozen_groups_.push_back(members);
        continue;
      }
      const std::size_t c = components_.size();
      FundamentalComponent fc;
      fc.vertices = members;
      for (Vertex q : members) {
        (q.side == Side::Left ? left_comp_ : right_comp_)[q.index] = c;
      }
      components_.push_back(std::move(fc));
    }
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!in_tight_[k]) continue;
      if (const auto c = left_comp_[edges[k].u]) components_[*c].edges.push_back(k);
    }
    location_.assign(components_.size(), Location::Bin);
    owner_.assign(components_.size(), 0);
  }

  void init_omega() {
    const auto essential = classification_.essential_vertices();
    omega_ = imputation_.at(essential.front());
    for (Vertex q : essential) {
      const Rational& x = imputation_.at(q);
      if (mode_ == Objective::Leximin ? x < omega_ : x > omega_) omega_ = x;
    }
  }

  // Executes all events that are due at the current clock value.
  void cascade() {
    while (!finished()) {
      auto [delta, ev] = next_event();
      if (delta != 0) break;
      apply_event(std::move(ev));
    }
  }

  void advance(const Rational& delta) {
    if (delta == 0) return;
    for (const auto& [root, d] : active_) {
      const Side up = increasing_side(d.rotation);
      for (std::size_t c : d.members) {
        for (Vertex q : components_[c].vertices) {
          if (q.side == up) {
            imputation_.at(q) += delta;
          } else {
            imputation_.at(q) -= delta;
          }
        }
      }
    }
    omega_ += sign() * delta;
  }

  // Where the extreme of component c sits.
  std::pair<bool, bool> extreme_sides(std::size_t c) const {
    const Rational e = extreme(c);
    bool left = false;
    bool right = false;
    for (Vertex q : components_[c].vertices) {
      if (imputation_.at(q) != e) continue;
      (q.side == Side::Left ? left : right) = true;
    }
    return {left, right};
  }

  void apply_activation(Event& ev) {
    const std::size_t c = ev.components.at(0);
    if (location_[c] != Location::Bin || extreme(c) != omega_) {
      throw InvariantViolation("activation of a component not due");
    }
    const auto [left, right] = extreme_sides(c);
    if (left && right) {
      ev.kind = EventKind::FullyRepaired;
      location_[c] = Location::FullyRepaired;
      ev.kept = {c};
      return;
    }
    ValidComponent d;
    d.root = c;
    d.rotation = rotation_for_lead(left ? Side::Left : Side::Right);
    d.members = {c};
    location_[c] = Location::Active;
    owner_[c] = c;
    active_.emplace(c, std::move(d));
  }

  // Moves the kept members of d to `target` and the rest back to Bin.
  // Joining edges survive in T only when both ends are kept.
  void dissolve(std::size_t root, const std::vector<std::size_t>& kept, Location target, Event& ev) {
    const ValidComponent d = active_.at(root);
    active_.erase(root);
    const std::set<std::size_t> keep(kept.begin(), kept.end());
    for (std::size_t c : d.members) {
      if (keep.count(c)) {
        location_[c] = target;
        ev.kept.push_back(c);
      } else {
        location_[c] = Location::Bin;
        ev.released.push_back(c);
      }
    }
    for (const auto& [child, link] : d.parent) {
      if (!keep.count(child) || !keep.count(link.first)) in_tight_[link.second] = false;
    }
  }

  void apply_fully_repaired(Event& ev) {
    const std::size_t root = ev.components.at(0);
    const auto kept = min_sub_fully_repaired(active_.at(root));
    dissolve(root, kept, Location::FullyRepaired, ev);
  }

  void apply_legitimate(Event& ev) {
    const std::size_t k = ev.edge.value();
    if (in_tight_[k] || closing_rate(k) <= 0 || imputation_.slack(game_.edge(k)) != 0) {
      throw InvariantViolation("edge " + std::to_string(k) + " is not legitimate");
    }
    const Edge& e = game_.edge(k);
    const Vertex a = left_vertex(e.u);
    const Vertex b = right_vertex(e.v);
    const LegitimateEdge le = describe_edge(k);
    ev.edge_case = le.edge_case;
    in_tight_[k] = true;

    if (le.edge_case == EdgeCase::ToActive) {
      const std::size_t ca = *component_of(a);
      const std::size_t cb = *component_of(b);
      const std::size_t ra = owner_[ca];
      const std::size_t rb = owner_[cb];
      ev.components = {ra, rb};
      const auto kept_a = paths_to(active_.at(ra), {ca});
      const auto kept_b = paths_to(active_.at(rb), {cb});
      dissolve(ra, kept_a, Location::FullyRepaired, ev);
      dissolve(rb, kept_b, Location::FullyRepaired, ev);
      return;
    }

    const bool a_down = rate(a) < 0;
    const Vertex here = a_down ? a : b;
    const Vertex there = a_down ? b : a;
    const std::size_t c_here = *component_of(here);
    const std::size_t root = owner_[c_here];
    const auto c_there = component_of(there);
    ev.components = {root};
    if (c_there) ev.components.push_back(*c_there);

    if (le.edge_case == EdgeCase::ToBin) {
      ValidComponent& d = active_.at(root);
      d.members.push_back(*c_there);
      d.parent[*c_there] = {c_here, k};
      location_[*c_there] = Location::Active;
      owner_[*c_there] = root;
      ev.kept = {*c_there};
      return;
    }

    const Location target =
        le.edge_case == EdgeCase::ToFrozen ? Location::Frozen : Location::FullyRepaired;
    const auto kept = paths_to(active_.at(root), {c_here});
    dissolve(root, kept, target, ev);
  }

  void apply_floor(Event& ev) {
    const Vertex z = ev.vertex.value();
    if (imputation_.at(z) != 0 || rate(z) >= 0) {
      throw InvariantViolation("floor event at a vertex that is not at zero");
    }
    const std::size_t c = *component_of(z);
    const std::size_t root = owner_[c];
    const auto kept = paths_to(active_.at(root), {c});
    dissolve(root, kept, Location::Frozen, ev);
  }

  void record(const Event& ev) {
    trace_.events.push_back(ev);
    if (snapshots_) trace_.snapshots.push_back(imputation_);
    if (check_invariants_) {
      const auto bad = invariant_violations();
      if (!bad.empty()) {
        throw InvariantViolation(std::string(to_string(ev.kind)) + " at omega " +
                                 to_string(omega_) + ": " + bad.front());
      }
    }
    if (observer_) observer_(*this, ev);
  }

  AssignmentGame game_;
  Classification classification_;
  Objective mode_;
  Imputation imputation_;
  Rational omega_;
  std::vector<bool> in_tight_;
  std::vector<FundamentalComponent> components_;
  std::vector<std::vector<Vertex>> frozen_groups_;
  std::vector<std::optional<std::size_t>> left_comp_;
  std::vector<std::optional<std::size_t>> right_comp_;
  std::vector<Location> location_;
  std::vector<std::size_t> owner_;
  std::map<std::size_t, ValidComponent> active_;
  Trace trace_;
  EventObserver observer_;
  bool snapshots_ = false;
  bool check_invariants_ = false;
};

struct MechanismResult {
  Imputation imputation;
  Trace trace;
};

/// Generous envelope around the quadratic event bound.
inline std::size_t event_budget(const AssignmentGame& game) {
  const std::size_t n = game.vertex_count();
  return 4 * n * n + 4;
}

/// Runs the mechanism from the given core imputation.
inline MechanismResult run(const AssignmentGame& game, const Classification& classification,
                           const Imputation& initial, Objective mode,
                           const MechanismOptions& options = {}, EventObserver observer = {}) {
  auto state = MechanismState::initialize(game, classification, initial, mode, options,
                                          std::move(observer));
  state.run_to_completion(event_budget(game));
  return {state.imputation(), std::move(state.trace())};
}

/// Classifies the game and runs the mechanism from the matching dual.
inline MechanismResult run(const AssignmentGame& game, Objective mode,
                           const MechanismOptions& options = {}) {
  const Classification c = classify(game);
  return run(game, c, initial_core_imputation(game), mode, options);
}

}  // namespace lexcore

#endif  // LEXCORE_MECHANISM_HPP
