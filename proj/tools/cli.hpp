// Copyright 2026 The Authors.
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

#ifndef PEBBLE_TOOLS_CLI_HPP
#define PEBBLE_TOOLS_CLI_HPP

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pebble.hpp"

namespace pebble::cli {

enum exit_code : int { ok = 0, usage = 2, io = 3, module = 4 };

/// Thrown for bad flags that CLI11 itself cannot detect.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int exit_for(errc code) {
  switch (code) {
    case errc::non_positive_lambda:
    case errc::negative_parameter:
    case errc::parameter_condition_violated:
    case errc::lambda_not_one:
      return usage;
    case errc::parse_error:
    case errc::dangling_reference:
    case errc::duplicate_incidence:
    case errc::duplicate_name:
      return io;
    default:
      return module;
  }
}

inline std::vector<int> parse_int_list(const std::string& text, std::size_t expected,
                                       const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw usage_error(what + ": \"" + item + "\" is not an integer");
    }
  }
  if (out.size() != expected) {
    throw usage_error(what + " needs " + std::to_string(expected) + " comma-separated integers");
  }
  return out;
}

/// `rods`, `kplane:<k>`, `dual-kplane:<k>`, `graph:<k>,<l>`.
inline sparsity_params resolve_preset(const std::string& name) {
  if (name == "rods") return validate_and_normalize_params(2, 2, 3, 3);
  auto suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (auto k = suffix("kplane:")) {
    const int v = parse_int_list(*k, 1, "kplane preset")[0];
    return validate_and_normalize_params(1, 1, v, v);
  }
  if (auto k = suffix("dual-kplane:")) {
    const int v = parse_int_list(*k, 1, "dual-kplane preset")[0];
    return validate_and_normalize_params(1, v, 1, v);
  }
  if (auto kl = suffix("graph:")) {
    const auto v = parse_int_list(*kl, 2, "graph preset");
    return derive_params(v[0], v[1], 2);
  }
  throw usage_error("unknown preset \"" + name + "\"");
}

inline sparsity_params resolve_params(const std::string& params, const std::string& preset) {
  if (!params.empty() && !preset.empty()) throw usage_error("give either --params or --preset");
  if (!preset.empty()) return resolve_preset(preset);
  if (params.empty()) throw usage_error("--params or --preset is required");
  const auto v = parse_int_list(params, 4, "--params");
  return validate_and_normalize_params(v[0], v[1], v[2], v[3]);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot write " + path);
  out << text;
  if (!out) throw io_error("write failed for " + path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct run_config {
  std::string params;
  std::string preset;
  std::string input;
  std::string out_path;
  std::optional<std::size_t> oracle_bound;
  std::uint64_t seed = 0;
  bool debug_invariants = false;
  // command-specific
  int k = 0;
  int l = 0;
  int lambda = 0;
  std::size_t points = 0;
  std::size_t lines = 0;
  double density = 0.5;
  bool max_subset = false;
  bool blocks = false;
  std::vector<std::string> pair;
};

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparsity and tightness of point-line incidence geometries via the pebble game",
               "pebblegeom"};
  app.require_subcommand(1);
  run_config cfg;

  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--params", cfg.params, "lambda,k1,k2,l");
    sub->add_option("--preset", cfg.preset, "rods | kplane:<k> | dual-kplane:<k> | graph:<k>,<l>");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Also write the result to this file");
    sub->add_option("--seed", cfg.seed, "Seed for sampling and generation");
  };

  auto* check = app.add_subcommand("check", "Run the recognition pebble game");
  add_params(check);
  add_common(check);
  check->add_flag("--debug-invariants", cfg.debug_invariants, "Assert game invariants after every move");
  check->add_option("geometry", cfg.input, "Geometry JSON file")->required();

  auto* extract = app.add_subcommand("extract", "Extract a maximum sparse subgeometry (lambda = 1)");
  add_params(extract);
  add_common(extract);
  extract->add_flag("--debug-invariants", cfg.debug_invariants, "Assert game invariants after every move");
  extract->add_option("geometry", cfg.input, "Geometry JSON file")->required();

  auto* convert = app.add_subcommand("convert", "Turn a hypergraph into a geometry with derived counts");
  add_common(convert);
  convert->add_option("--k", cfg.k, "Hypergraph k")->required();
  convert->add_option("--l", cfg.l, "Hypergraph l")->required();
  convert->add_option("--lambda", cfg.lambda, "Fixed lambda (default: smallest feasible)");
  convert->add_option("hypergraph", cfg.input, "Hypergraph JSON file")->required();

  auto* generate = app.add_subcommand("generate", "Generate geometries");
  generate->require_subcommand(1);
  auto* tight = generate->add_subcommand("tight", "Construct a (1,k1,k2,l)-tight geometry");
  add_params(tight);
  add_common(tight);
  tight->add_option("--points", cfg.points, "Number of points")->required();
  tight->add_option("--lines", cfg.lines, "Number of lines")->required();
  tight->add_flag("--debug-invariants", cfg.debug_invariants, "Check tightness after every augmentation");
  auto* random = generate->add_subcommand("random", "Random geometry");
  add_common(random);
  random->add_option("--points", cfg.points, "Number of points")->required();
  random->add_option("--lines", cfg.lines, "Number of lines")->required();
  random->add_option("--density", cfg.density, "Incidence probability in [0,1]");

  auto* oracle = app.add_subcommand("oracle", "Brute-force verdict over all supports");
  add_params(oracle);
  add_common(oracle);
  oracle->add_option("--oracle-bound", cfg.oracle_bound, "Largest |P|+|L| to enumerate");
  oracle->add_flag("--max-subset", cfg.max_subset, "Also report a maximum sparse subset");
  oracle->add_flag("--blocks", cfg.blocks, "Also enumerate blocks and check their closure");
  oracle->add_option("geometry", cfg.input, "Geometry JSON file")->required();

  auto* matroid = app.add_subcommand("verify-matroid", "Check the basis-exchange axiom");
  add_params(matroid);
  add_common(matroid);
  matroid->add_option("--oracle-bound", cfg.oracle_bound, "Largest |P|*|L| to enumerate");
  matroid->add_option("--points", cfg.points, "Number of points (full enumeration)");
  matroid->add_option("--lines", cfg.lines, "Number of lines (full enumeration)");
  matroid->add_option("--pair", cfg.pair, "Two geometry files holding bases to compare")->expected(2);

  std::vector<std::string> argv_store{"pebblegeom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  auto emit = [&](const json& report) {
    const std::string text = dump(report);
    out << text;
    if (!cfg.out_path.empty()) write_file(cfg.out_path, text);
  };
  run_options ropt;
  ropt.debug_invariants = cfg.debug_invariants;
  ropt.sample_seed = cfg.seed;

  try {
    if (check->parsed()) {
      const auto p = resolve_params(cfg.params, cfg.preset);
      const auto g = load_geometry(read_file(cfg.input));
      emit(verdict_to_json(g, run_recognition(g, p, ropt)));
    } else if (extract->parsed()) {
      const auto p = resolve_params(cfg.params, cfg.preset);
      if (p.lambda != 1) throw error(errc::lambda_not_one, "extraction needs lambda = 1");
      const auto g = load_geometry(read_file(cfg.input));
      const auto v = run_extraction(g, p, ropt);
      out << dump(verdict_to_json(g, v));
      if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, dump(geometry_to_json(g.with_incidences(*v.accepted))));
      }
    } else if (convert->parsed()) {
      const auto h = load_hypergraph(read_file(cfg.input));
      std::optional<int> lam;
      if (cfg.lambda != 0) lam = cfg.lambda;
      const auto p = derive_params(h, cfg.k, cfg.l, lam);
      const auto g = hypergraph_to_geometry(h);
      out << dump(json{{"params", params_to_json(p)}, {"geometry", geometry_to_json(g)}});
      if (!cfg.out_path.empty()) write_file(cfg.out_path, dump(geometry_to_json(g)));
    } else if (tight->parsed()) {
      const auto p = resolve_params(cfg.params, cfg.preset);
      generator_options gopt;
      gopt.check_each_step = cfg.debug_invariants;
      emit(geometry_to_json(construct_tight_geometry(p, cfg.points, cfg.lines, gopt)));
    } else if (random->parsed()) {
      emit(geometry_to_json(random_geometry(cfg.points, cfg.lines, cfg.density, cfg.seed)));
    } else if (oracle->parsed()) {
      const auto p = resolve_params(cfg.params, cfg.preset);
      const auto g = load_geometry(read_file(cfg.input));
      oracle_bounds bounds;
      if (cfg.oracle_bound) bounds.max_vertices = *cfg.oracle_bound;
      auto v = brute_force_verdict(g, p, bounds);
      if (cfg.max_subset) v.accepted = max_sparse_subset(g, p, bounds);
      json report = verdict_to_json(g, v);
      if (cfg.blocks && v.status != sparsity_status::not_sparse) {
        report["blocks"] =
            block_report_to_json(g, enumerate_blocks(g, p, bounds), verify_block_closure(g, p, bounds));
      }
      emit(report);
    } else if (matroid->parsed()) {
      const auto p = resolve_params(cfg.params, cfg.preset);
      oracle_bounds bounds;
      if (cfg.oracle_bound) bounds.max_vertices = *cfg.oracle_bound;
      if (!cfg.pair.empty()) {
        const auto a = load_geometry(read_file(cfg.pair[0]));
        const auto b = load_geometry(read_file(cfg.pair[1]));
        emit(matroid_report_to_json(verify_exchange_pair(a, b, p, bounds)));
      } else {
        if (cfg.points == 0 && cfg.lines == 0) throw usage_error("give --points/--lines or --pair");
        if (cfg.oracle_bound) bounds.max_ground = *cfg.oracle_bound;
        emit(matroid_report_to_json(verify_matroid_exchange(cfg.points, cfg.lines, p, bounds)));
      }
    }
  } catch (const usage_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return io;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return ok;
}

}  // namespace pebble::cli

#endif  // PEBBLE_TOOLS_CLI_HPP
