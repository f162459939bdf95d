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

#ifndef LEXCORE_TOOLS_CLI_HPP
#define LEXCORE_TOOLS_CLI_HPP

#include "lexcore/lexcore.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace lexcore::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kInternal = 3,
};

enum class Format { Json, Table };

struct RunConfig {
  std::string subcommand;
  std::string objective;
  std::string input = "-";
  std::string imputation_path;
  std::string start_path;
  Format format = Format::Json;
  bool verify = false;
  bool snapshots = false;
};

inline std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Objective parse_objective(const std::string& s) {
  return s == "leximax" ? Objective::Leximax : Objective::Leximin;
}

// Left-aligned columns, two spaces apart.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c + 1 < row.size()) cell.resize(width[c] + 2, ' ');
      line += cell;
    }
    out << line << '\n';
  }
}

// The matching dual unless --start names a core imputation.
inline Imputation starting_imputation(const RunConfig& cfg, const AssignmentGame& game) {
  if (cfg.start_path.empty()) return initial_core_imputation(game);
  const Imputation start = parse_imputation(read_source(cfg.start_path));
  if (start.u.size() != game.left_size() || start.v.size() != game.right_size()) {
    throw InputError("start: imputation dimensions do not match the instance");
  }
  if (!check_core(game, start).is_core) throw InputError("start: imputation is not in the core");
  return start;
}

inline std::vector<Vertex> all_vertices(const AssignmentGame& game) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < game.left_size(); ++i) out.push_back(left_vertex(i));
  for (std::size_t j = 0; j < game.right_size(); ++j) out.push_back(right_vertex(j));
  return out;
}

inline void print_imputation_table(std::ostream& out, const AssignmentGame& game,
                                   const Classification& c, const Imputation& imp) {
  std::vector<std::vector<std::string>> rows{{"player", "profit", "class"}};
  for (Vertex q : all_vertices(game)) {
    rows.push_back({game.name_of(q), to_string(imp.at(q)), to_string(c.of(q))});
  }
  print_table(out, rows);
}

inline Json profile_json(const Profile& p) { return to_json(p.values); }

inline int cmd_solve(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out,
                     std::ostream& err) {
  const Objective mode = parse_objective(cfg.objective);
  const Classification c = classify(game);
  MechanismOptions options;
  options.check_invariants = true;
  const auto result = run(game, c, starting_imputation(cfg, game), mode, options);
  const auto essential = c.essential_vertices();
  const Profile profile = profile_of(result.imputation, essential, mode);

  std::optional<bool> verified;
  if (cfg.verify) {
    if (!oracle::within_guards(game)) {
      err << "warning: --verify ignored, instance exceeds the oracle guards\n";
    } else {
      verified = oracle::lexicographic_optimum(game, mode) == result.imputation;
    }
  }

  if (cfg.format == Format::Json) {
    Json doc;
    doc["worth"] = to_string(c.worth);
    doc["imputation"] = to_json(result.imputation);
    doc["profile"] = profile_json(profile);
    if (verified) doc["verified"] = *verified;
    out << doc.dump() << '\n';
  } else {
    out << to_string(mode) << " core imputation, worth " << to_string(c.worth) << "\n\n";
    print_imputation_table(out, game, c, result.imputation);
    out << "\nprofile:";
    for (const auto& x : profile.values) out << ' ' << to_string(x);
    out << '\n';
    if (verified) out << "oracle: " << (*verified ? "agrees" : "MISMATCH") << '\n';
  }
  if (verified && !*verified) {
    err << "error: mechanism output disagrees with the exhaustive oracle\n";
    return kInternal;
  }
  return kOk;
}

inline int cmd_classify(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out) {
  const Classification c = classify(game);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["worth"] = to_string(c.worth);
    doc["non_degenerate"] = is_non_degenerate(game, c);
    Json u = Json::array();
    Json v = Json::array();
    for (auto l : c.left) u.push_back(to_string(l));
    for (auto l : c.right) v.push_back(to_string(l));
    doc["vertices"] = {{"u", u}, {"v", v}};
    Json edges = Json::array();
    for (std::size_t k = 0; k < game.edges().size(); ++k) {
      const Edge& e = game.edge(k);
      Json item;
      item["u"] = e.u;
      item["v"] = e.v;
      item["w"] = to_string(e.weight);
      item["label"] = to_string(c.edge[k]);
      edges.push_back(std::move(item));
    }
    doc["edges"] = std::move(edges);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << "worth " << to_string(c.worth) << (is_non_degenerate(game, c) ? " (non-degenerate)" : " (degenerate)")
      << "\n\n";
  std::vector<std::vector<std::string>> rows{{"player", "class"}};
  for (Vertex q : all_vertices(game)) rows.push_back({game.name_of(q), to_string(c.of(q))});
  print_table(out, rows);
  out << '\n';
  rows = {{"edge", "weight", "class"}};
  for (std::size_t k = 0; k < game.edges().size(); ++k) {
    const Edge& e = game.edge(k);
    rows.push_back({"(" + game.name_of(left_vertex(e.u)) + ", " + game.name_of(right_vertex(e.v)) + ")",
                    to_string(e.weight), to_string(c.edge[k])});
  }
  print_table(out, rows);
  return kOk;
}

inline int cmd_extremes(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out) {
  const Classification c = classify(game);
  const auto ex = extreme_imputations(game, c);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["worth"] = to_string(c.worth);
    doc["u_optimal"] = to_json(ex.u_optimal);
    doc["v_optimal"] = to_json(ex.v_optimal);
    out << doc.dump() << '\n';
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"player", "u-optimal", "v-optimal"}};
  for (Vertex q : all_vertices(game)) {
    rows.push_back({game.name_of(q), to_string(ex.u_optimal.at(q)), to_string(ex.v_optimal.at(q))});
  }
  print_table(out, rows);
  return kOk;
}

inline int cmd_check(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out) {
  if (cfg.imputation_path.empty()) throw CLI::RequiredError("--imputation");
  const Imputation imp = parse_imputation(read_source(cfg.imputation_path));
  if (imp.u.size() != game.left_size() || imp.v.size() != game.right_size()) {
    throw InputError("imputation dimensions do not match the instance");
  }
  const auto report = check_core(game, imp);
  if (cfg.format == Format::Json) {
    Json doc;
    doc["is_core"] = report.is_core;
    Json edges = Json::array();
    for (std::size_t k : report.violated_edges) {
      const Edge& e = game.edge(k);
      Json item;
      item["u"] = e.u;
      item["v"] = e.v;
      item["w"] = to_string(e.weight);
      item["slack"] = to_string(imp.slack(e));
      edges.push_back(std::move(item));
    }
    doc["violated_edges"] = std::move(edges);
    Json negative = Json::array();
    for (Vertex q : report.negative_vertices) negative.push_back(vertex_label(q));
    doc["negative_vertices"] = std::move(negative);
    doc["total_gap"] = to_string(report.total_gap);
    out << doc.dump() << '\n';
    return kOk;
  }
  out << (report.is_core ? "in the core" : "NOT in the core") << '\n';
  for (std::size_t k : report.violated_edges) {
    const Edge& e = game.edge(k);
    out << "  under-tight edge (" << game.name_of(left_vertex(e.u)) << ", "
        << game.name_of(right_vertex(e.v)) << "): slack " << to_string(imp.slack(e)) << '\n';
  }
  for (Vertex q : report.negative_vertices) out << "  negative profit at " << game.name_of(q) << '\n';
  if (report.total_gap != 0) out << "  worth minus total profit: " << to_string(report.total_gap) << '\n';
  return kOk;
}

inline int cmd_oracle(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out) {
  if (!oracle::within_guards(game)) {
    throw oracle::GuardExceeded("instance exceeds the oracle guards");
  }
  Json doc;
  if (!cfg.objective.empty()) {
    const Objective mode = parse_objective(cfg.objective);
    const Imputation imp = oracle::lexicographic_optimum(game, mode);
    const auto labels = oracle::classify_by_enumeration(game);
    doc["objective"] = to_string(mode);
    doc["imputation"] = to_json(imp);
    doc["profile"] = profile_json(profile_of(imp, labels.essential_vertices(), mode));
  } else {
    const auto ex = oracle::oracle_extremes(game);
    doc["leximin"] = to_json(oracle::oracle_leximin(game));
    doc["leximax"] = to_json(oracle::oracle_leximax(game));
    doc["u_optimal"] = to_json(ex.u_optimal);
    doc["v_optimal"] = to_json(ex.v_optimal);
  }
  if (cfg.format == Format::Json) {
    out << doc.dump() << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_trace(const RunConfig& cfg, const AssignmentGame& game, std::ostream& out) {
  const Objective mode = parse_objective(cfg.objective);
  const Classification c = classify(game);
  MechanismOptions options;
  options.check_invariants = true;
  options.snapshots = cfg.snapshots;
  const auto result = run(game, c, starting_imputation(cfg, game), mode, options);
  if (cfg.format == Format::Json) {
    out << trace_to_jsonl(game, result.trace);
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"omega", "event", "detail"}};
  for (const Event& ev : result.trace.events) {
    std::string detail;
    if (ev.edge) {
      const Edge& e = game.edge(*ev.edge);
      detail = "(" + game.name_of(left_vertex(e.u)) + ", " + game.name_of(right_vertex(e.v)) + ")";
      if (ev.edge_case) detail += std::string(" ") + to_string(*ev.edge_case);
    } else if (ev.vertex) {
      detail = game.name_of(*ev.vertex);
    } else if (!ev.components.empty()) {
      detail = "component " + std::to_string(ev.components.front());
    }
    rows.push_back({to_string(ev.omega), to_string(ev.kind), detail});
  }
  print_table(out, rows);
  return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leximin and leximax core imputations of assignment games"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", cfg.input, "Instance JSON file, or - for stdin")->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };
  auto add_objective = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--objective", cfg.objective, "leximin or leximax")
                    ->check(CLI::IsMember({"leximin", "leximax"}));
    if (required) opt->required();
  };

  auto* solve = app.add_subcommand("solve", "Compute the leximin or leximax core imputation");
  add_common(solve);
  add_objective(solve, true);
  solve->add_option("--start", cfg.start_path, "Initial core imputation JSON file");
  solve->add_flag("--verify", cfg.verify, "Cross-check against the exhaustive oracle");

  auto* classify_cmd = app.add_subcommand("classify", "Label players and edges");
  add_common(classify_cmd);

  auto* extremes = app.add_subcommand("extremes", "U-optimal and V-optimal core imputations");
  add_common(extremes);

  auto* check = app.add_subcommand("check", "Test an imputation for core membership");
  add_common(check);
  check->add_option("--imputation", cfg.imputation_path, "Imputation JSON file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force ground truth (small games only)");
  add_common(oracle_cmd);
  add_objective(oracle_cmd, false);

  auto* trace = app.add_subcommand("trace", "Event log of a mechanism run, one JSON object per line");
  add_common(trace);
  add_objective(trace, true);
  trace->add_option("--start", cfg.start_path, "Initial core imputation JSON file");
  trace->add_flag("--snapshots", cfg.snapshots, "Include the imputation after each event");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "table" ? Format::Table : Format::Json;

  try {
    const AssignmentGame game = parse_instance(read_source(cfg.input));
    if (cfg.subcommand == "solve") return cmd_solve(cfg, game, out, err);
    if (cfg.subcommand == "classify") return cmd_classify(cfg, game, out);
    if (cfg.subcommand == "extremes") return cmd_extremes(cfg, game, out);
    if (cfg.subcommand == "check") return cmd_check(cfg, game, out);
    if (cfg.subcommand == "oracle") return cmd_oracle(cfg, game, out);
    if (cfg.subcommand == "trace") return cmd_trace(cfg, game, out);
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const oracle::GuardExceeded& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace lexcore::cli

#endif  // LEXCORE_TOOLS_CLI_HPP
