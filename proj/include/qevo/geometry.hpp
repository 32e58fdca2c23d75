// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qevo/linalg.hpp"

namespace qevo {

// sqrt(<H^2> - <H>^2) in the given state.
double energy_uncertainty(const Mat& h, const Vec& psi);

// Fubini-Study geodesic distance between rays: 2 arccos|<a|b>|, in [0, pi].
double geodesic_distance(const Vec& a, const Vec& b);

// Ratio s0 / s of geodesic distance to the path length actually traversed
// under a stationary H during travel_time; s = (2 delta_E / hbar) * t.
double geodesic_efficiency(const Mat& h, const Vec& a, const Vec& b,
                           double travel_time, double hbar = 1.0);

// delta_E / ||H||, the fraction of the available spectral speed being used.
double speed_efficiency(const Mat& h, const Vec& psi);

// Squared geodesic curvature of the evolution curve through psi under a
// stationary H: <(H - <H>)^4> / delta_E^4 - 1, evaluated in psi.  Clamped
// to zero from below; a stationary psi (delta_E <= 1e-12) is an error.
double curvature_stationary(const Mat& h, const Vec& psi);

// |c_final - c_initial| / travel_time.
double average_entanglement_speed(double c_initial, double c_final,
                                  double travel_time);

// Everything above for one evolution, in scale-free units: times in hbar/E,
// energies in E, speeds in E/hbar.
struct GeometryReport {
  double delta_e;
  double s0;
  double s;
  double travel_time;
  double eta_ge;
  double eta_se;
  double kappa_sq;
  double speed;  // 2 delta_E / hbar, the Fubini-Study speed
  double avg_entanglement_speed;
};

GeometryReport make_geometry_report(const Mat& h, const Vec& a, const Vec& b,
                                    double travel_time, double c_initial,
                                    double c_final, double energy_scale = 1.0,
                                    double hbar = 1.0);

}  // namespace qevo
