// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line binary, driven through the shell.
// QEVO_CLI_PATH is injected by the build.

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "qevo/io.hpp"
#include "qevo/linalg.hpp"
#include "support/golden.hpp"

using nlohmann::json;
namespace fs = std::filesystem;
namespace qt = qevo::testing;

namespace {

constexpr double kPi = 3.14159265358979323846;

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "qevo_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

// Runs the binary with QEVO_SEED scrubbed from the environment unless the
// caller injects its own value through env_prefix.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout." + std::to_string(counter));
  const fs::path err = work_dir() / ("stderr." + std::to_string(counter));
  ++counter;
  std::string cmd = "env -u QEVO_SEED " + env_prefix + " \"" QEVO_CLI_PATH "\" " +
                    args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = qevo::read_text_file(out.string());
  r.err = qevo::read_text_file(err.string());
  return r;
}

fs::path write_state_file(const std::string& name, const qevo::Vec& v) {
  const fs::path path = work_dir() / name;
  qevo::write_text_file(path.string(), qevo::state_to_json(v).dump());
  return path;
}

qevo::Vec basis4(int k) {
  qevo::Vec v = qevo::Vec::Zero(4);
  v(k) = 1;
  return v;
}

qevo::Vec bell_phi_plus() {
  qevo::Vec v = qevo::Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

qevo::Vec bell_psi_plus() {
  qevo::Vec v = qevo::Vec::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("scenario command writes a report pair into --out") {
  const fs::path dir = work_dir() / "scenario_out";
  const RunResult r = run_cli("scenario opt-nonortho --steps 64 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(qevo::read_text_file((dir / "report.json").string()));
  CHECK(report.at("scenario").get<std::string>() == "opt-nonortho");
  CHECK(report.at("geometry").at("eta_GE").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(report.at("series").at("times").size() == 65);
  const std::string csv = qevo::read_text_file((dir / "series.csv").string());
  CHECK(csv.rfind("t,concurrence,yukalov\n", 0) == 0);
}

TEST_CASE("scenario command prints JSON or CSV to stdout") {
  const RunResult as_json = run_cli("scenario example1 --steps 32");
  REQUIRE(as_json.exit_code == 0);
  const json report = json::parse(as_json.out);
  CHECK(report.at("scenario").get<std::string>() == "example1");
  CHECK(report.at("series").at("zanardi").is_array());

  const RunResult as_csv = run_cli("scenario example1 --steps 32 --format csv");
  REQUIRE(as_csv.exit_code == 0);
  CHECK(as_csv.out.rfind("t,concurrence,yukalov,zanardi\n", 0) == 0);
}

TEST_CASE("scenario command records the singular production sample as nan") {
  const RunResult r = run_cli("scenario subopt-ortho --steps 32 --format csv");
  REQUIRE(r.exit_code == 0);
  const std::string tail = r.out.substr(r.out.size() - 5);
  CHECK(tail == ",nan\n");
}

TEST_CASE("scenario command rejects bad input with a single-line diagnostic") {
  const RunResult unknown = run_cli("scenario bogus");
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "error: UnknownScenario:"));
  CHECK(unknown.err.find('\n') == unknown.err.size() - 1);

  const RunResult odd = run_cli("scenario example1 --steps 33");
  CHECK(odd.exit_code == 2);
  CHECK(contains(odd.err, "error: Infeasible:"));

  const RunResult nosub = run_cli("");
  CHECK(nosub.exit_code == 2);
  CHECK(contains(nosub.err, "error: UsageError:"));
}

TEST_CASE("build optimal reproduces the reference generator") {
  const fs::path a = write_state_file("a_00.json", basis4(0));
  const fs::path b = write_state_file("b_phi.json", bell_phi_plus());
  const RunResult r = run_cli("build optimal --state-a " + a.string() +
                              " --state-b " + b.string() +
                              " --delta-e 0.70710678118654752");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("kind").get<std::string>() == "optimal");
  const qevo::Mat h = qevo::operator_from_json(out.at("hamiltonian"));
  CHECK((h - qt::golden_opt_nonortho_h()).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(out.at("geometry").at("eta_GE").get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("build suboptimal reproduces the reference generator") {
  const fs::path a = write_state_file("a_00.json", basis4(0));
  const fs::path b = write_state_file("b_phi.json", bell_phi_plus());
  const RunResult r = run_cli("build suboptimal --state-a " + a.string() +
                              " --state-b " + b.string() +
                              " --delta 2.41421356237309505");
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  const qevo::Mat h = qevo::operator_from_json(out.at("hamiltonian"));
  CHECK((h - qt::golden_subopt_nonortho_h()).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(out.at("geometry").at("travel_time").get<double>() ==
        doctest::Approx(kPi / 2).epsilon(1e-9));
  CHECK(out.at("geometry").at("eta_GE").get<double>() ==
        doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("build surfaces domain errors from the library") {
  const fs::path a = write_state_file("a_00.json", basis4(0));
  const fs::path psi = write_state_file("b_psi.json", bell_psi_plus());
  const RunResult ortho = run_cli("build suboptimal --state-a " + a.string() +
                                  " --state-b " + psi.string() + " --delta 2.0");
  CHECK(ortho.exit_code == 2);
  CHECK(contains(ortho.err, "error: OrthogonalEndpoints:"));
  CHECK(contains(ortho.err, "four-level"));

  const RunResult mixed = run_cli("build optimal --state-a " + a.string() +
                                  " --state-b " + psi.string() + " --delta 2.0");
  CHECK(mixed.exit_code == 2);
  CHECK(contains(mixed.err, "error: Infeasible:"));

  const RunResult wrong = run_cli("build suboptimal --state-a " + a.string() +
                                  " --state-b " + psi.string() + " --delta-e 1.0");
  CHECK(wrong.exit_code == 2);
  CHECK(contains(wrong.err, "error: Infeasible:"));

  qevo::Vec small(2);
  small << 1, 0;
  const fs::path tiny = write_state_file("tiny.json", small);
  const RunResult dim = run_cli("build optimal --state-a " + tiny.string() +
                                " --state-b " + psi.string());
  CHECK(dim.exit_code == 2);
  CHECK(contains(dim.err, "error: WrongDimension:"));
}

TEST_CASE("analyze-gate reports the canonical quantifiers") {
  const fs::path gate = work_dir() / "cnot.json";
  qevo::write_text_file(gate.string(),
                        qevo::operator_to_json(qt::cnot_gate()).dump());
  const RunResult r = run_cli("analyze-gate --file " + gate.string());
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out.at("zanardi").get<double>() ==
        doctest::Approx(2.0 / 9.0).epsilon(1e-9));
  CHECK(out.at("operator_schmidt_number").get<int>() == 2);
  CHECK(out.at("c_vector")[0].get<double>() ==
        doctest::Approx(kPi / 4).epsilon(1e-9));
  CHECK(std::abs(out.at("c_vector")[1].get<double>()) < 1e-9);
  CHECK(out.at("monte_carlo").is_null());
}

TEST_CASE("analyze-gate distinguishes io and parse failures") {
  const RunResult missing =
      run_cli("analyze-gate --file " + (work_dir() / "no_such.json").string());
  CHECK(missing.exit_code == 3);
  CHECK(contains(missing.err, "error: IoError:"));

  const fs::path garbage = work_dir() / "garbage.json";
  qevo::write_text_file(garbage.string(), "{oops");
  const RunResult bad = run_cli("analyze-gate --file " + garbage.string());
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "error: ParseError:"));
}

TEST_CASE("identical invocations produce byte-identical artifacts") {
  const fs::path dir1 = work_dir() / "rerun1";
  const fs::path dir2 = work_dir() / "rerun2";
  const std::string args = "scenario example2 --steps 64 --samples 2000 --seed 11";
  REQUIRE(run_cli(args + " --out " + dir1.string()).exit_code == 0);
  REQUIRE(run_cli(args + " --out " + dir2.string()).exit_code == 0);
  CHECK(qevo::read_text_file((dir1 / "report.json").string()) ==
        qevo::read_text_file((dir2 / "report.json").string()));
  CHECK(qevo::read_text_file((dir1 / "series.csv").string()) ==
        qevo::read_text_file((dir2 / "series.csv").string()));

  const json report = json::parse(qevo::read_text_file((dir1 / "report.json").string()));
  CHECK(report.at("propagator").at("monte_carlo").at("n_samples").get<int>() == 2000);
  CHECK(report.at("propagator").at("monte_carlo").at("seed").get<int>() == 11);
}

TEST_CASE("seed resolution prefers the flag over the environment") {
  const fs::path gate = work_dir() / "cnot_seed.json";
  qevo::write_text_file(gate.string(),
                        qevo::operator_to_json(qt::cnot_gate()).dump());
  const std::string base = "analyze-gate --samples 2000 --file " + gate.string();

  const RunResult flag = run_cli(base + " --seed 55");
  const RunResult env = run_cli(base, "QEVO_SEED=55");
  const RunResult both = run_cli(base + " --seed 55", "QEVO_SEED=99");
  REQUIRE(flag.exit_code == 0);
  REQUIRE(env.exit_code == 0);
  REQUIRE(both.exit_code == 0);
  CHECK(flag.out == env.out);
  CHECK(flag.out == both.out);

  const RunResult bad = run_cli(base, "QEVO_SEED=notanumber");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "error: ParseError:"));
  CHECK(contains(bad.err, "QEVO_SEED"));
}
