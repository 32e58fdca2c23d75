// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace qevo {

namespace {

void require_state_for(const Mat& h, const Vec& psi, const char* what) {
  if (h.rows() != h.cols() || h.rows() != psi.size()) {
    throw DimensionMismatch(std::string(what) + ": operator and state sizes differ");
  }
  if (!is_hermitian(h)) {
    throw NotHermitian(std::string(what) + ": generator is not Hermitian");
  }
  if (!is_normalized(psi)) {
    throw Infeasible(std::string(what) + ": state is not normalized");
  }
}

}  // namespace

double energy_uncertainty(const Mat& h, const Vec& psi) {
  require_state_for(h, psi, "energy_uncertainty");
  Vec hpsi = h * psi;
  double mean = psi.dot(hpsi).real();
  double second = hpsi.squaredNorm();
  return std::sqrt(std::max(0.0, second - mean * mean));
}

double geodesic_distance(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("geodesic_distance: state dimensions differ");
  }
  if (!is_normalized(a) || !is_normalized(b)) {
    throw Infeasible("geodesic_distance: states must be normalized");
  }
  double ov = std::min(std::abs(a.dot(b)), 1.0);
  return 2.0 * std::acos(ov);
}

double geodesic_efficiency(const Mat& h, const Vec& a, const Vec& b,
                           double travel_time, double hbar) {
  if (!(travel_time > 0.0)) {
    throw Infeasible("geodesic_efficiency: travel_time must be positive");
  }
  double s0 = geodesic_distance(a, b);
  double de = energy_uncertainty(h, a);
  if (de <= 1e-12) {
    throw StationaryState("geodesic_efficiency: the state does not move");
  }
  double s = 2.0 * de * travel_time / hbar;
  return s0 / s;
}

double speed_efficiency(const Mat& h, const Vec& psi) {
  double norm = spectral_norm(h);
  if (norm <= 1e-14) {
    throw ZeroOperator("speed_efficiency: zero generator");
  }
  return energy_uncertainty(h, psi) / norm;
}

double curvature_stationary(const Mat& h, const Vec& psi) {
  require_state_for(h, psi, "curvature_stationary");
  Vec hpsi = h * psi;
  double mean = psi.dot(hpsi).real();
  Vec v = hpsi - mean * psi;  // (H - <H>) psi
  double var = v.squaredNorm();
  if (std::sqrt(var) <= 1e-12) {
    throw StationaryState("curvature_stationary: vanishing energy uncertainty");
  }
  Vec w = h * v - mean * v;  // (H - <H>)^2 psi
  double fourth = w.squaredNorm();
  double kappa_sq = fourth / (var * var) - 1.0;
  // Exactly zero for two-level motion; tiny negatives are roundoff.
  return std::max(kappa_sq, 0.0);
}

double average_entanglement_speed(double c_initial, double c_final,
                                  double travel_time) {
  if (!(travel_time > 0.0)) {
    throw Infeasible("average_entanglement_speed: travel_time must be positive");
  }
  return std::abs(c_final - c_initial) / travel_time;
}

GeometryReport make_geometry_report(const Mat& h, const Vec& a, const Vec& b,
                                    double travel_time, double c_initial,
                                    double c_final, double energy_scale,
                                    double hbar) {
  if (!(energy_scale > 0.0) || !(hbar > 0.0)) {
    throw Infeasible("make_geometry_report: energy_scale and hbar must be positive");
  }
  GeometryReport r;
  double de = energy_uncertainty(h, a);
  r.delta_e = de / energy_scale;
  r.s0 = geodesic_distance(a, b);
  r.s = 2.0 * de * travel_time / hbar;
  r.travel_time = travel_time * energy_scale / hbar;
  r.eta_ge = r.s0 / r.s;
  r.eta_se = speed_efficiency(h, a);
  r.kappa_sq = curvature_stationary(h, a);
  r.speed = 2.0 * de / energy_scale;
  r.avg_entanglement_speed =
      average_entanglement_speed(c_initial, c_final, travel_time) * hbar / energy_scale;
  return r;
}

}  // namespace qevo
