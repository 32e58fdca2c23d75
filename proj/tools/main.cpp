// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  Exit codes: 0 success, 2 validation or domain
// error, 3 filesystem error.  Every failure prints a single line
// "error: <Kind>: <message>" to stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qevo/entanglement.hpp"
#include "qevo/errors.hpp"
#include "qevo/gate_analysis.hpp"
#include "qevo/geometry.hpp"
#include "qevo/hamiltonians.hpp"
#include "qevo/io.hpp"
#include "qevo/scenarios.hpp"

namespace {

std::string single_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cerr << "error: " << kind << ": " << single_line(message) << "\n";
}

// Precedence: explicit --seed flag, then QEVO_SEED, then 0.
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  const char* env = std::getenv("QEVO_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  errno = 0;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0') {
    throw qevo::ParseError("QEVO_SEED must be a nonnegative integer, got '" +
                           std::string(env) + "'");
  }
  return value;
}

void write_or_print(const std::optional<std::string>& out_path,
                    const std::string& content) {
  if (out_path) {
    qevo::write_text_file(*out_path, content);
  } else {
    std::cout << content;
  }
}

struct ScenarioArgs {
  std::string id;
  int steps = 1024;
  int samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir;
  std::string format = "json";
  double energy = 1.0;
  double hbar = 1.0;
};

int cmd_scenario(const ScenarioArgs& args) {
  const qevo::ScenarioId id = qevo::parse_scenario_id(args.id);
  const qevo::Units units{args.energy, args.hbar};
  qevo::ScenarioReport report = qevo::run_scenario(id, args.steps, units);

  if (args.samples > 0) {
    const qevo::ScenarioDefinition def = qevo::make_scenario(id, units);
    const qevo::Mat u = qevo::propagator(def.setup.hamiltonian,
                                         def.setup.travel_time, args.hbar);
    report.propagator = qevo::analyze_gate(
        u, args.samples, resolve_seed(args.seed_given, args.seed));
  }

  const std::string report_json =
      qevo::scenario_report_to_json(report).dump(2) + "\n";
  const std::string series_csv = qevo::time_series_to_csv(report.series);

  if (!args.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(args.out_dir, ec);
    if (ec) {
      throw qevo::IoError("cannot create directory '" + args.out_dir +
                          "': " + ec.message());
    }
    const std::filesystem::path dir(args.out_dir);
    qevo::write_text_file((dir / "report.json").string(), report_json);
    qevo::write_text_file((dir / "series.csv").string(), series_csv);
  } else if (args.format == "csv") {
    std::cout << series_csv;
  } else {
    std::cout << report_json;
  }
  return 0;
}

struct BuildArgs {
  std::string kind;
  std::string state_a_path;
  std::string state_b_path;
  std::optional<double> delta_e;
  std::optional<double> delta;
  double energy = 1.0;
  double hbar = 1.0;
  std::optional<std::string> out_path;
};

int cmd_build(const BuildArgs& args) {
  const qevo::Vec a = qevo::load_state(args.state_a_path);
  const qevo::Vec b = qevo::load_state(args.state_b_path);
  if (a.size() != 4 || b.size() != 4) {
    throw qevo::WrongDimension("build expects two-qubit states (dim 4), got " +
                               std::to_string(a.size()) + " and " +
                               std::to_string(b.size()));
  }

  qevo::EvolutionSetup setup;
  if (args.kind == "optimal") {
    if (args.delta) {
      throw qevo::Infeasible("--delta applies to the suboptimal builder; "
                             "use --delta-e for the optimal one");
    }
    setup = qevo::build_optimal(a, b, args.delta_e.value_or(args.energy),
                                args.hbar);
  } else {
    if (args.delta_e) {
      throw qevo::Infeasible("--delta-e applies to the optimal builder; "
                             "use --delta with --energy for the suboptimal one");
    }
    if (!args.delta) {
      throw qevo::Infeasible("the suboptimal builder requires --delta");
    }
    setup = qevo::build_suboptimal(a, b, args.energy, *args.delta, args.hbar);
  }

  const qevo::GeometryReport geometry = qevo::make_geometry_report(
      setup.hamiltonian, setup.a, setup.b, setup.travel_time,
      qevo::concurrence(setup.a), qevo::concurrence(setup.b), args.energy,
      args.hbar);

  nlohmann::json out{
      {"kind", args.kind},
      {"hamiltonian", qevo::operator_to_json(setup.hamiltonian)},
      {"geometry", qevo::geometry_to_json(geometry)},
  };
  write_or_print(args.out_path, out.dump(2) + "\n");
  return 0;
}

struct AnalyzeArgs {
  std::string file;
  int samples = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::optional<std::string> out_path;
};

int cmd_analyze_gate(const AnalyzeArgs& args) {
  const qevo::Mat u = qevo::load_operator(args.file);
  if (u.rows() != 4 || u.cols() != 4) {
    throw qevo::WrongDimension("analyze-gate expects a 4x4 operator, got " +
                               std::to_string(u.rows()) + "x" +
                               std::to_string(u.cols()));
  }
  const qevo::PropagatorAnalysis analysis = qevo::analyze_gate(
      u, args.samples, resolve_seed(args.seed_given, args.seed));
  write_or_print(args.out_path,
                 qevo::propagator_analysis_to_json(analysis).dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entangling evolutions: builders, gate analysis, and bundled "
               "scenario reproduction"};
  app.require_subcommand(1);

  ScenarioArgs scenario_args;
  CLI::App* scenario = app.add_subcommand(
      "scenario", "Run a built-in evolution and emit its report");
  scenario->add_option("id", scenario_args.id,
                       "One of: opt-nonortho, subopt-nonortho, opt-ortho, "
                       "subopt-ortho, example1, example2, example3")
      ->required();
  scenario->add_option("--steps", scenario_args.steps,
                       "Time grid intervals (even, >= 16)")
      ->capture_default_str();
  scenario->add_option("--samples", scenario_args.samples,
                       "Monte Carlo samples for the final propagator "
                       "(0 disables)")
      ->capture_default_str();
  CLI::Option* scenario_seed =
      scenario->add_option("--seed", scenario_args.seed, "Monte Carlo seed");
  scenario->add_option("--out", scenario_args.out_dir,
                       "Directory for report.json and series.csv");
  scenario->add_option("--format", scenario_args.format,
                       "Stdout format when --out is not given")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  scenario->add_option("--energy", scenario_args.energy, "Energy scale E")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scenario->add_option("--hbar", scenario_args.hbar, "Value of hbar")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand(
      "build", "Construct a Hamiltonian driving state A to state B");
  build->add_option("kind", build_args.kind, "optimal or suboptimal")
      ->required()
      ->check(CLI::IsMember({"optimal", "suboptimal"}));
  build->add_option("--state-a", build_args.state_a_path, "Initial state JSON")
      ->required();
  build->add_option("--state-b", build_args.state_b_path, "Final state JSON")
      ->required();
  build->add_option("--delta-e", build_args.delta_e,
                    "Energy uncertainty for the optimal builder (default: "
                    "--energy)");
  build->add_option("--delta", build_args.delta,
                    "Superposition weight ratio for the suboptimal builder");
  build->add_option("--energy", build_args.energy, "Energy scale E")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build->add_option("--hbar", build_args.hbar, "Value of hbar")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build->add_option("--out", build_args.out_path, "Output JSON path");

  AnalyzeArgs analyze_args;
  CLI::App* analyze = app.add_subcommand(
      "analyze-gate", "Entanglement quantifiers of a 4x4 unitary");
  analyze->add_option("--file", analyze_args.file, "Operator JSON path")
      ->required();
  analyze->add_option("--samples", analyze_args.samples,
                      "Monte Carlo samples (0 disables)")
      ->capture_default_str();
  CLI::Option* analyze_seed =
      analyze->add_option("--seed", analyze_args.seed, "Monte Carlo seed");
  analyze->add_option("--out", analyze_args.out_path, "Output JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error("UsageError", e.what());
    return 2;
  }

  scenario_args.seed_given = scenario_seed->count() > 0;
  analyze_args.seed_given = analyze_seed->count() > 0;

  try {
    if (scenario->parsed()) return cmd_scenario(scenario_args);
    if (build->parsed()) return cmd_build(build_args);
    return cmd_analyze_gate(analyze_args);
  } catch (const qevo::IoError& e) {
    print_error(e.kind(), e.what());
    return 3;
  } catch (const qevo::Error& e) {
    print_error(e.kind(), e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return 2;
  }
}
