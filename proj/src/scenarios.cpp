// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/scenarios.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <utility>

#include "qevo/entanglement.hpp"
#include "qevo/errors.hpp"

namespace qevo {

namespace {

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Vec basis_state(int index) {
  Vec v = Vec::Zero(4);
  v(index) = 1.0;
  return v;
}

// (|01> + |10>) / sqrt(2)
Vec bell_psi_plus() {
  Vec v = Vec::Zero(4);
  v(1) = v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

// (|00> + |11>) / sqrt(2)
Vec bell_phi_plus() {
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

void require_simpson_steps(int n_steps) {
  if (n_steps < 16 || n_steps % 2 != 0) {
    throw Infeasible("step count must be an even integer >= 16, got " +
                     std::to_string(n_steps));
  }
}

// Diagonalized propagator factory; cheaper than re-solving per sample.
class PropagatorFactory {
 public:
  PropagatorFactory(const Mat& h, double hbar) : hbar_(hbar) {
    if (!is_hermitian(h)) throw NotHermitian("hamiltonian must be hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> solver(h);
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
  }

  Mat at(double t) const {
    Vec phases(values_.size());
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
      phases(k) = std::exp(Complex(0, -values_(k) * t / hbar_));
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
  }

 private:
  double hbar_;
  Eigen::VectorXd values_;
  Mat vectors_;
};

}  // namespace

ScenarioId parse_scenario_id(const std::string& name) {
  if (name == "opt-nonortho") return ScenarioId::OptNonortho;
  if (name == "subopt-nonortho") return ScenarioId::SuboptNonortho;
  if (name == "opt-ortho") return ScenarioId::OptOrtho;
  if (name == "subopt-ortho") return ScenarioId::SuboptOrtho;
  if (name == "example1") return ScenarioId::Example1;
  if (name == "example2") return ScenarioId::Example2;
  if (name == "example3") return ScenarioId::Example3;
  throw UnknownScenario("no scenario named '" + name + "'");
}

std::string to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::OptNonortho: return "opt-nonortho";
    case ScenarioId::SuboptNonortho: return "subopt-nonortho";
    case ScenarioId::OptOrtho: return "opt-ortho";
    case ScenarioId::SuboptOrtho: return "subopt-ortho";
    case ScenarioId::Example1: return "example1";
    case ScenarioId::Example2: return "example2";
    case ScenarioId::Example3: return "example3";
  }
  throw UnknownScenario("invalid scenario id");
}

const std::vector<ScenarioId>& all_scenarios() {
  static const std::vector<ScenarioId> ids = {
      ScenarioId::OptNonortho, ScenarioId::SuboptNonortho,
      ScenarioId::OptOrtho,    ScenarioId::SuboptOrtho,
      ScenarioId::Example1,    ScenarioId::Example2,
      ScenarioId::Example3,
  };
  return ids;
}

ScenarioDefinition make_scenario(ScenarioId id, Units units) {
  const double e = units.energy;
  const double hbar = units.hbar;
  ScenarioDefinition def;
  def.id = id;

  switch (id) {
    case ScenarioId::OptNonortho: {
      // Product state to a Bell state along the two-level geodesic; the
      // overlap is 1/sqrt(2), so dE = E/sqrt(2) makes the travel time pi/4
      // in hbar/E units.
      def.setup = build_optimal(basis_state(0), bell_phi_plus(),
                                e / std::sqrt(2.0), hbar);
      break;
    }
    case ScenarioId::SuboptNonortho: {
      // Same endpoints, detuned superposition weight.  delta = 1 + sqrt(2)
      // halves the energy uncertainty relative to the optimal run while
      // keeping both eigenlevels at -E and +E.
      def.setup = build_suboptimal(basis_state(0), bell_phi_plus(), e,
                                   1.0 + std::sqrt(2.0), hbar);
      break;
    }
    case ScenarioId::OptOrtho: {
      // Orthogonal endpoints; dE chosen to match the four-level
      // construction below so the two runs share a clock.
      def.setup = build_optimal(basis_state(0), bell_psi_plus(),
                                std::sqrt(2.5) * e, hbar);
      break;
    }
    case ScenarioId::SuboptOrtho: {
      def.setup = build_four_level_orthogonal(e, hbar);
      break;
    }
    case ScenarioId::Example1: {
      // H = E (XX + ZZ): two interaction axes advance at equal rates.
      def.setup.hamiltonian =
          e * (tensor(pauli_x(), pauli_x()) + tensor(pauli_z(), pauli_z()));
      def.setup.a = basis_state(1);
      Vec b = Vec::Zero(4);
      b(1) = Complex(0.5, 0.5);
      b(2) = Complex(0.5, -0.5);
      def.setup.b = b;
      def.setup.delta_e = energy_uncertainty(def.setup.hamiltonian, def.setup.a);
      def.setup.travel_time =
          optimal_time(def.setup.a, def.setup.b, def.setup.delta_e, hbar);
      def.setup.kind = EvolutionKind::Optimal;
      def.canonical_rates = {{1.0, 0.0, 1.0}};
      break;
    }
    case ScenarioId::Example2: {
      // Isotropic exchange: all three axes advance together.
      def.setup.hamiltonian =
          e * (tensor(pauli_x(), pauli_x()) + tensor(pauli_y(), pauli_y()) +
               tensor(pauli_z(), pauli_z()));
      def.setup.a = basis_state(1);
      Vec b = Vec::Zero(4);
      b(1) = Complex(0.5, 0.5);
      b(2) = Complex(0.5, -0.5);
      def.setup.b = b;
      def.setup.delta_e = energy_uncertainty(def.setup.hamiltonian, def.setup.a);
      def.setup.travel_time =
          optimal_time(def.setup.a, def.setup.b, def.setup.delta_e, hbar);
      def.setup.kind = EvolutionKind::Optimal;
      def.canonical_rates = {{1.0, 1.0, 1.0}};
      break;
    }
    case ScenarioId::Example3: {
      Vec b = Vec::Zero(4);
      b(1) = Complex(0.5, 0.5);
      b(2) = Complex(0.5, -0.5);
      def.setup = build_optimal(basis_state(1), b, 2.0 * e, hbar);
      def.canonical_rates = {{1.0, 1.0, 0.0}};
      break;
    }
  }
  return def;
}

double average_concurrence(const Mat& h, const Vec& a, double t_final,
                           int n_steps, double hbar) {
  require_simpson_steps(n_steps);
  PropagatorFactory prop(h, hbar);
  const double step = t_final / n_steps;
  double sum = 0.0;
  for (int j = 0; j <= n_steps; ++j) {
    const double c = concurrence(prop.at(step * j) * a);
    const double weight = (j == 0 || j == n_steps) ? 1.0
                          : (j % 2 == 1)           ? 4.0
                                                   : 2.0;
    sum += weight * c;
  }
  return sum * step / 3.0 / t_final;
}

TimeSeries concurrence_series(const Mat& h, const Vec& a, double t_final,
                              int n_steps, double hbar) {
  if (n_steps < 1) throw Infeasible("need at least one step");
  PropagatorFactory prop(h, hbar);
  TimeSeries series;
  series.times.reserve(n_steps + 1);
  series.concurrence.reserve(n_steps + 1);
  series.yukalov.reserve(n_steps + 1);
  const double step = t_final / n_steps;
  for (int j = 0; j <= n_steps; ++j) {
    const double t = step * j;
    const Mat u = prop.at(t);
    series.times.push_back(t);
    series.concurrence.push_back(concurrence(u * a));
    try {
      series.yukalov.push_back(yukalov_production(u));
    } catch (const TracelessPropagator&) {
      series.yukalov.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return series;
}

ScenarioReport run_scenario(ScenarioId id, int n_steps, Units units) {
  require_simpson_steps(n_steps);
  const ScenarioDefinition def = make_scenario(id, units);
  const EvolutionSetup& setup = def.setup;
  const double t_final = setup.travel_time;
  const double time_scale = units.energy / units.hbar;

  ScenarioReport report;
  report.id = id;
  report.geometry = make_geometry_report(
      setup.hamiltonian, setup.a, setup.b, t_final, concurrence(setup.a),
      concurrence(setup.b), units.energy, units.hbar);

  PropagatorFactory prop(setup.hamiltonian, units.hbar);
  const double step = t_final / n_steps;
  double simpson_sum = 0.0;

  TimeSeries& series = report.series;
  series.times.reserve(n_steps + 1);
  series.concurrence.reserve(n_steps + 1);
  series.yukalov.reserve(n_steps + 1);
  if (def.canonical_rates) {
    series.zanardi.emplace();
    series.zanardi->reserve(n_steps + 1);
  } else {
    report.c_series.emplace();
  }

  for (int j = 0; j <= n_steps; ++j) {
    const double t = step * j;
    const Mat u = prop.at(t);
    const double c = concurrence(u * setup.a);
    const double weight = (j == 0 || j == n_steps) ? 1.0
                          : (j % 2 == 1)           ? 4.0
                                                   : 2.0;
    simpson_sum += weight * c;

    series.times.push_back(t * time_scale);
    series.concurrence.push_back(c);
    try {
      series.yukalov.push_back(yukalov_production(u));
    } catch (const TracelessPropagator&) {
      series.yukalov.push_back(std::numeric_limits<double>::quiet_NaN());
    }

    if (def.canonical_rates) {
      const double phase = units.energy * t / units.hbar;
      series.zanardi->push_back(zanardi_power_canonical(
          {(*def.canonical_rates)[0] * phase, (*def.canonical_rates)[1] * phase,
           (*def.canonical_rates)[2] * phase}));
    } else {
      const CVector folded = weyl_cvector(u).folded;
      report.c_series->c1.push_back(folded.c1);
      report.c_series->c2.push_back(folded.c2);
      report.c_series->c3.push_back(folded.c3);
    }
  }
  report.avg_concurrence = simpson_sum * step / 3.0 / t_final;
  report.propagator = analyze_gate(prop.at(t_final));
  return report;
}

std::vector<SummaryRow> summary_table(Units units) {
  const double e = units.energy;
  const double hbar = units.hbar;
  std::vector<SummaryRow> rows;

  for (ScenarioId id : {ScenarioId::OptNonortho, ScenarioId::SuboptNonortho,
                        ScenarioId::OptOrtho, ScenarioId::SuboptOrtho}) {
    const ScenarioDefinition def = make_scenario(id, units);
    const EvolutionSetup& setup = def.setup;
    PropagatorFactory prop(setup.hamiltonian, hbar);

    SummaryRow row;
    row.id = id;
    row.avg_concurrence = average_concurrence(setup.hamiltonian, setup.a,
                                              setup.travel_time, 1024, hbar);
    row.avg_entanglement_speed =
        average_entanglement_speed(concurrence(setup.a), concurrence(setup.b),
                                   setup.travel_time) *
        hbar / e;

    // Quadratic coefficient a of eps(t) ~ a (E t / hbar)^2, read off deep in
    // the quadratic regime; the quartic correction then comes from the slope
    // of eps / (E t / hbar)^2 against (E t / hbar)^2 between two short times.
    const double t_short = 1e-3 * hbar / e;
    const double x_short = e * t_short / hbar;
    row.short_time_coeff =
        yukalov_production(prop.at(t_short)) / (x_short * x_short);

    const double t1 = 0.05 * hbar / e;
    const double t2 = 0.10 * hbar / e;
    const double x1 = e * t1 / hbar;
    const double x2 = e * t2 / hbar;
    const double r1 = yukalov_production(prop.at(t1)) / (x1 * x1);
    const double r2 = yukalov_production(prop.at(t2)) / (x2 * x2);
    row.quartic_coeff = (r2 - r1) / (x2 * x2 - x1 * x1);

    rows.push_back(row);
  }
  return rows;
}

}  // namespace qevo
