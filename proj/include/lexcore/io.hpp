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

#ifndef LEXCORE_IO_HPP
#define LEXCORE_IO_HPP

#include "lexcore/classification.hpp"
#include "lexcore/game.hpp"
#include "lexcore/mechanism.hpp"

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexcore {

using Json = nlohmann::ordered_json;

/// Malformed or invalid instance / imputation input. what() names the
/// offending location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Rational rational_from_json(const Json& node, const std::string& where) {
  try {
    if (node.is_number_integer()) {
      return node.is_number_unsigned() ? Rational(BigInt(node.get<std::uint64_t>()))
                                       : Rational(BigInt(node.get<std::int64_t>()));
    }
    if (node.is_string()) return parse_rational(node.get<std::string>());
  } catch (const RationalFormatError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

inline std::size_t index_from_json(const Json& node, const std::vector<std::string>& names,
                                   std::size_t size, const std::string& where) {
  if (node.is_number_integer()) {
    if (node.is_number_unsigned() || node.get<std::int64_t>() >= 0) {
      const auto x = node.get<std::uint64_t>();
      if (x < size) return static_cast<std::size_t>(x);
    }
    throw InputError(where + ": index out of range");
  }
  if (node.is_string()) {
    const auto name = node.get<std::string>();
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == name) return k;
    }
    throw InputError(where + ": unknown vertex name \"" + name + "\"");
  }
  throw InputError(where + ": expected a vertex index or name");
}

inline std::size_t size_from_json(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<std::int64_t>() < 0) {
    throw InputError(std::string("\"") + key + "\": expected a non-negative integer");
  }
  return doc[key].get<std::size_t>();
}

inline std::vector<std::string> names_from_json(const Json& names, const char* key, std::size_t size) {
  std::vector<std::string> out;
  if (!names.contains(key)) return out;
  const Json& list = names[key];
  if (!list.is_array() || list.size() != size) {
    throw InputError(std::string("names.") + key + ": expected " + std::to_string(size) + " strings");
  }
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (!list[k].is_string()) {
      throw InputError(std::string("names.") + key + "[" + std::to_string(k) + "]: expected a string");
    }
    out.push_back(list[k].get<std::string>());
  }
  return out;
}

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

/// Reads the instance format
///   {"left": n, "right": m, "edges": [{"u": i, "v": j, "w": 10 | "p/q"}, ...],
///    "names": {"left": [...], "right": [...]}}
/// where "names" is optional and edge endpoints may be given by name.
inline AssignmentGame parse_instance(std::string_view text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  const std::size_t left = detail::size_from_json(doc, "left");
  const std::size_t right = detail::size_from_json(doc, "right");

  std::vector<std::string> left_names;
  std::vector<std::string> right_names;
  if (doc.contains("names")) {
    if (!doc["names"].is_object()) throw InputError("names: expected an object");
    left_names = detail::names_from_json(doc["names"], "left", left);
    right_names = detail::names_from_json(doc["names"], "right", right);
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw InputError("edges: expected an array");
  }
  std::vector<Edge> edges;
  const Json& list = doc["edges"];
  if (list.empty()) throw InputError("edges: game has no edges");
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const Json& item = list[k];
    if (!item.is_object() || !item.contains("u") || !item.contains("v") || !item.contains("w")) {
      throw InputError(where + ": expected {\"u\", \"v\", \"w\"}");
    }
    Edge e;
    e.u = detail::index_from_json(item["u"], left_names, left, where + ".u");
    e.v = detail::index_from_json(item["v"], right_names, right, where + ".v");
    e.weight = detail::rational_from_json(item["w"], where + ".w");
    if (e.weight <= 0) throw InputError(where + ".w: non-positive weight");
    for (std::size_t p = 0; p < edges.size(); ++p) {
      if (edges[p].u == e.u && edges[p].v == e.v) {
        throw InputError(where + ": duplicate edge (also edges[" + std::to_string(p) + "])");
      }
    }
    edges.push_back(std::move(e));
  }
  try {
    return AssignmentGame(left, right, std::move(edges), std::move(left_names), std::move(right_names));
  } catch (const InvalidGame& e) {
    throw InputError(std::string("instance: ") + e.what());
  }
}

inline AssignmentGame parse_instance(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_instance(text);
}

inline Json weight_to_json(const Rational& w) {
  if (is_integral(w)) {
    const BigInt n = boost::multiprecision::numerator(w);
    if (n <= std::numeric_limits<std::int64_t>::max()) return n.convert_to<std::int64_t>();
  }
  return to_string(w);
}

/// Canonical serialization: edges in (u, v) order, compact, newline-terminated.
inline std::string serialize_instance(const AssignmentGame& game) {
  Json doc;
  doc["left"] = game.left_size();
  doc["right"] = game.right_size();
  Json edges = Json::array();
  for (const Edge& e : game.edges()) {
    Json item;
    item["u"] = e.u;
    item["v"] = e.v;
    item["w"] = weight_to_json(e.weight);
    edges.push_back(std::move(item));
  }
  doc["edges"] = std::move(edges);
  if (!game.left_names().empty() || !game.right_names().empty()) {
    Json names;
    if (!game.left_names().empty()) names["left"] = game.left_names();
    if (!game.right_names().empty()) names["right"] = game.right_names();
    doc["names"] = std::move(names);
  }
  return doc.dump() + "\n";
}

/// Reads {"u": [...], "v": [...]} with integer or "p/q" entries.
inline Imputation parse_imputation(std::string_view text) {
  const Json doc = detail::parse_document(text);
  if (!doc.is_object() || !doc.contains("u") || !doc.contains("v") || !doc["u"].is_array() ||
      !doc["v"].is_array()) {
    throw InputError("imputation: expected {\"u\": [...], \"v\": [...]}");
  }
  Imputation imp;
  for (std::size_t i = 0; i < doc["u"].size(); ++i) {
    imp.u.push_back(detail::rational_from_json(doc["u"][i], "u[" + std::to_string(i) + "]"));
  }
  for (std::size_t j = 0; j < doc["v"].size(); ++j) {
    imp.v.push_back(detail::rational_from_json(doc["v"][j], "v[" + std::to_string(j) + "]"));
  }
  return imp;
}

inline Json to_json(const Rational& x) { return to_string(x); }

inline Json to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

inline Json to_json(const Imputation& imp) {
  Json out;
  out["u"] = to_json(imp.u);
  out["v"] = to_json(imp.v);
  return out;
}

inline Json event_to_json(const AssignmentGame& game, const Event& ev,
                          const Imputation* snapshot = nullptr) {
  Json out;
  out["omega"] = to_string(ev.omega);
  out["kind"] = to_string(ev.kind);
  out["components"] = ev.components;
  if (ev.edge) {
    const Edge& e = game.edge(*ev.edge);
    Json edge;
    edge["id"] = *ev.edge;
    edge["u"] = e.u;
    edge["v"] = e.v;
    out["edge"] = std::move(edge);
  }
  if (ev.edge_case) out["case"] = to_string(*ev.edge_case);
  if (ev.vertex) out["vertex"] = vertex_label(*ev.vertex);
  out["kept"] = ev.kept;
  out["released"] = ev.released;
  if (snapshot) out["imputation"] = to_json(*snapshot);
  return out;
}

/// One JSON object per line, in event order.
inline std::string trace_to_jsonl(const AssignmentGame& game, const Trace& trace) {
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.events.size(); ++k) {
    const Imputation* snap = k < trace.snapshots.size() ? &trace.snapshots[k] : nullptr;
    os << event_to_json(game, trace.events[k], snap).dump() << '\n';
  }
  return os.str();
}

}  // namespace lexcore

#endif  // LEXCORE_IO_HPP
