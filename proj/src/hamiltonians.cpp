// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/hamiltonians.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace qevo {

namespace {

Complex checked_overlap(const Vec& a, const Vec& b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(what) + ": endpoint dimensions differ");
  }
  if (a.size() < 2) {
    throw WrongDimension(std::string(what) + ": endpoints must have dim >= 2");
  }
  if (!is_normalized(a) || !is_normalized(b)) {
    throw Infeasible(std::string(what) + ": endpoints must be normalized");
  }
  return a.dot(b);  // <a|b>
}

void require_positive(double x, const char* what, const char* name) {
  if (!(x > 0.0)) {
    throw Infeasible(std::string(what) + ": " + name + " must be positive");
  }
}

double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

double optimal_time(const Vec& a, const Vec& b, double delta_e, double hbar) {
  Complex z = checked_overlap(a, b, "optimal_time");
  require_positive(delta_e, "optimal_time", "delta_e");
  require_positive(hbar, "optimal_time", "hbar");
  if (std::abs(z) >= 1.0 - kSameRayTol) {
    throw SameRay("optimal_time: endpoints lie on the same ray");
  }
  return hbar * clamped_acos(std::abs(z)) / delta_e;
}

EvolutionSetup build_optimal(const Vec& a, const Vec& b, double delta_e, double hbar) {
  Complex z = checked_overlap(a, b, "build_optimal");
  require_positive(delta_e, "build_optimal", "delta_e");
  require_positive(hbar, "build_optimal", "hbar");
  double az = std::abs(z);
  if (az >= 1.0 - kSameRayTol) {
    throw SameRay("build_optimal: endpoints lie on the same ray");
  }

  Mat h;
  const Complex i(0.0, 1.0);
  if (az <= kOrthogonalTol) {
    h = i * delta_e * (b * a.adjoint() - a * b.adjoint());
  } else {
    double pref = az / std::sqrt(1.0 - az * az);
    h = i * delta_e * pref *
        (b * a.adjoint() / z - a * b.adjoint() / std::conj(z));
  }
  double t = hbar * clamped_acos(az) / delta_e;
  return {std::move(h), a, b, t, delta_e, EvolutionKind::Optimal};
}

double solve_suboptimal_phase(double theta_ab, double delta) {
  if (!(theta_ab > 0.0) || !(theta_ab < M_PI)) {
    throw Infeasible("solve_suboptimal_phase: theta_ab must lie in (0, pi)");
  }
  require_positive(delta, "solve_suboptimal_phase", "delta");
  double arg = std::sin(theta_ab / 2.0) * (1.0 + delta * delta) / (2.0 * delta);
  if (arg > 1.0 + 1e-12) {
    throw Infeasible(
        "solve_suboptimal_phase: no phase solution; the population skew delta "
        "is too far from 1 for this opening angle");
  }
  return 2.0 * std::asin(std::min(arg, 1.0));
}

double suboptimal_travel_time(double energy, double delta_phi, double hbar) {
  require_positive(energy, "suboptimal_travel_time", "energy");
  require_positive(hbar, "suboptimal_travel_time", "hbar");
  if (!(delta_phi > 0.0) || !(delta_phi < 2.0 * M_PI)) {
    throw Infeasible("suboptimal_travel_time: delta_phi must lie in (0, 2 pi)");
  }
  return hbar * delta_phi / (2.0 * energy);
}

namespace {

EvolutionSetup build_suboptimal_impl(const Vec& a, const Vec& b, double energy,
                                     double delta, double delta_phi, double hbar) {
  Complex z = a.dot(b);
  double az = std::abs(z);
  double c2 = az * az;  // cos^2(theta_ab / 2)

  // Hermitian part skews the eigenstate populations; the anti-Hermitian pair
  // fixes the rotation sense.  delta = 1 kills the first term and reduces to
  // the time-optimal generator.
  double skew = energy * ((1.0 - delta * delta) / (1.0 + delta * delta)) / (1.0 - c2);
  double cot_half = std::cos(delta_phi / 2.0) / std::sin(delta_phi / 2.0);
  const Complex i(0.0, 1.0);
  Mat pa = a * a.adjoint();
  Mat pb = b * b.adjoint();
  Mat xba = b * a.adjoint() / z;
  Mat xab = a * b.adjoint() / std::conj(z);
  Mat h = skew * (pa + pb - (xab + xba)) + i * energy * cot_half * (xba - xab);

  double t = suboptimal_travel_time(energy, delta_phi, hbar);
  double delta_e = 2.0 * delta / (1.0 + delta * delta) * energy;
  return {std::move(h), a, b, t, delta_e, EvolutionKind::Suboptimal};
}

}  // namespace

EvolutionSetup build_suboptimal(const Vec& a, const Vec& b, double energy,
                                double delta, double hbar) {
  Complex z = checked_overlap(a, b, "build_suboptimal");
  require_positive(energy, "build_suboptimal", "energy");
  require_positive(delta, "build_suboptimal", "delta");
  require_positive(hbar, "build_suboptimal", "hbar");
  double az = std::abs(z);
  if (az >= 1.0 - kSameRayTol) {
    throw SameRay("build_suboptimal: endpoints lie on the same ray");
  }
  if (az <= kOrthogonalTol) {
    throw OrthogonalEndpoints(
        "build_suboptimal: a stationary two-level evolution cannot connect "
        "orthogonal endpoints without exiting the two-dimensional space they "
        "span; use the four-level construction instead");
  }
  double theta = 2.0 * clamped_acos(az);
  double delta_phi = solve_suboptimal_phase(theta, delta);
  return build_suboptimal_impl(a, b, energy, delta, delta_phi, hbar);
}

EvolutionSetup build_suboptimal(const SuboptimalSpec& spec, double hbar) {
  Complex z = checked_overlap(spec.a, spec.b, "build_suboptimal");
  require_positive(spec.energy, "build_suboptimal", "energy");
  require_positive(spec.delta, "build_suboptimal", "delta");
  require_positive(hbar, "build_suboptimal", "hbar");
  double az = std::abs(z);
  if (az >= 1.0 - kSameRayTol) {
    throw SameRay("build_suboptimal: endpoints lie on the same ray");
  }
  if (az <= kOrthogonalTol) {
    throw OrthogonalEndpoints(
        "build_suboptimal: a stationary two-level evolution cannot connect "
        "orthogonal endpoints without exiting the two-dimensional space they "
        "span; use the four-level construction instead");
  }
  if (!(spec.delta_phi > 0.0) || !(spec.delta_phi < 2.0 * M_PI)) {
    throw Infeasible("build_suboptimal: delta_phi must lie in (0, 2 pi)");
  }
  double d2 = spec.delta * spec.delta;
  double s = std::sin(spec.delta_phi / 2.0);
  double lhs = az * az;
  double rhs = 1.0 - 4.0 * d2 / ((1.0 + d2) * (1.0 + d2)) * s * s;
  if (std::abs(lhs - rhs) > 1e-9) {
    throw Infeasible(
        "build_suboptimal: delta_phi is inconsistent with the endpoint "
        "overlap and delta");
  }
  return build_suboptimal_impl(spec.a, spec.b, spec.energy, spec.delta,
                               spec.delta_phi, hbar);
}

EvolutionSetup build_four_level_orthogonal(double energy, double hbar) {
  require_positive(energy, "build_four_level_orthogonal", "energy");
  require_positive(hbar, "build_four_level_orthogonal", "hbar");
  const double r = 1.0 / std::sqrt(2.0);
  // Rotation from the energy eigenbasis to the computational basis; chosen
  // so the endpoints are |00> and the symmetric combination of |01>, |10>.
  Eigen::Matrix4d m;
  m << 0.5, 0.5, 0.5, 0.5,
       r, -r, 0.0, 0.0,
       0.0, 0.0, -r, r,
       0.5, 0.5, -0.5, -0.5;
  Eigen::Vector4d levels(-2.0, -1.0, 1.0, 2.0);
  Eigen::Matrix4d hd = m * (energy * levels).asDiagonal() * m.transpose();

  Vec a = Vec::Zero(4);
  a(0) = 1.0;
  Vec b = Vec::Zero(4);
  b(1) = r;
  b(2) = r;
  double delta_e = std::sqrt(2.5) * energy;
  return {hd.cast<Complex>(), std::move(a), std::move(b), M_PI * hbar / energy,
          delta_e, EvolutionKind::FourLevel};
}

EvolutionSetup build_four_level_orthogonal(const Vec& a, const Vec& b,
                                           double energy, double hbar) {
  Complex z = checked_overlap(a, b, "build_four_level_orthogonal");
  require_positive(energy, "build_four_level_orthogonal", "energy");
  require_positive(hbar, "build_four_level_orthogonal", "hbar");
  if (std::abs(z) > 1e-10) {
    throw Infeasible("build_four_level_orthogonal: endpoints must be orthogonal");
  }
  const Eigen::Index n = a.size();
  if (n < 4) {
    throw WrongDimension("build_four_level_orthogonal: needs dim >= 4");
  }

  // Complete {a, b} with two Gram-Schmidt survivors of the standard basis.
  std::vector<Vec> basis = {a, b};
  for (Eigen::Index k = 0; k < n && basis.size() < 4; ++k) {
    Vec v = Vec::Zero(n);
    v(k) = 1.0;
    for (const Vec& u : basis) v -= u.dot(v) * u;
    if (v.norm() > 1e-8) basis.push_back(v.normalized());
  }
  if (basis.size() < 4) {
    throw Infeasible("build_four_level_orthogonal: could not complete a basis");
  }
  const Vec& w1 = basis[2];
  const Vec& w2 = basis[3];

  const double r = 1.0 / std::sqrt(2.0);
  Vec u = r * (a + b);
  Vec v = r * (a - b);
  // a = (e1+e2+e3+e4)/2 and b = (e1-e2-e3+e4)/2, so the four phases
  // (1, -1, -1, 1) picked up at t = pi hbar / E swap a into b exactly.
  std::array<Vec, 4> e = {r * (u + w1), r * (v + w2), r * (v - w2), r * (u - w1)};
  Eigen::Vector4d levels(-2.0, -1.0, 1.0, 2.0);
  Mat h = Mat::Zero(n, n);
  for (int k = 0; k < 4; ++k) {
    h += energy * levels(k) * (e[k] * e[k].adjoint());
  }
  double delta_e = std::sqrt(2.5) * energy;
  return {std::move(h), a, b, M_PI * hbar / energy, delta_e, EvolutionKind::FourLevel};
}

}  // namespace qevo
