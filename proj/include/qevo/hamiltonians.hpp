// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qevo/linalg.hpp"

namespace qevo {

// Overlap thresholds deciding when endpoint pairs count as parallel or
// orthogonal rays.
inline constexpr double kSameRayTol = 1e-12;
inline constexpr double kOrthogonalTol = 1e-12;

enum class EvolutionKind { Optimal, Suboptimal, FourLevel };

// A stationary Hamiltonian together with the endpoint pair it connects and
// the time at which U(travel_time) maps a onto b (up to global phase).
struct EvolutionSetup {
  Mat hamiltonian;
  Vec a;
  Vec b;
  double travel_time;
  double delta_e;  // energy uncertainty of the evolution, constant in time
  EvolutionKind kind;
};

// Shortest time any Hamiltonian with energy uncertainty delta_e needs to
// drive a into b: hbar * arccos|<a|b>| / delta_e.
double optimal_time(const Vec& a, const Vec& b, double delta_e, double hbar = 1.0);

// Time-optimal Hamiltonian for the endpoint pair: a rank-2 generator that
// rotates a into b inside their span at the speed limit.  Handles orthogonal
// endpoints by the continuous limit form i * delta_e * (|b><a| - |a><b|).
EvolutionSetup build_optimal(const Vec& a, const Vec& b, double delta_e,
                             double hbar = 1.0);

// Relative eigenphase advance needed by the two-level suboptimal family.
// The populations ratio delta and opening angle theta_ab = 2 arccos|<a|b>|
// must satisfy sin(theta_ab/2) * (1 + delta^2) / (2 delta) <= 1; the
// principal solution in (0, pi] is returned.
double solve_suboptimal_phase(double theta_ab, double delta);

// travel time = hbar * delta_phi / (2 energy); the spectrum is {-E, +E}, so
// the relative phase advances at rate 2E/hbar.
double suboptimal_travel_time(double energy, double delta_phi, double hbar = 1.0);

// Suboptimal stationary Hamiltonian with spectrum {-E, +E} whose eigenstate
// populations in a are skewed by delta (delta = 1 recovers build_optimal).
// Requires nonorthogonal, distinct-ray endpoints and a feasible delta.
EvolutionSetup build_suboptimal(const Vec& a, const Vec& b, double energy,
                                double delta, double hbar = 1.0);

// Advanced variant with an explicit phase branch.  delta_phi must lie in
// (0, 2 pi) and satisfy the feasibility identity
//   cos^2(theta_ab / 2) = 1 - [4 delta^2 / (1 + delta^2)^2] sin^2(delta_phi / 2)
// within 1e-9; the non-principal branch gives a longer but valid evolution.
struct SuboptimalSpec {
  Vec a;
  Vec b;
  double energy;
  double delta;
  double delta_phi;
};
EvolutionSetup build_suboptimal(const SuboptimalSpec& spec, double hbar = 1.0);

// Reference four-level evolution between |00> and (|01>+|10>)/sqrt(2):
// spectrum {-2E, -E, E, 2E}, travel time pi * hbar / E.  Orthogonal
// endpoints cannot be connected by the two-level suboptimal family, so the
// evolution has to leave the plane spanned by the endpoints.
EvolutionSetup build_four_level_orthogonal(double energy = 1.0, double hbar = 1.0);

// Same construction for an arbitrary orthogonal pair: completes {a, b} to a
// basis by Gram-Schmidt and places the four eigenstates so that a and b are
// balanced +/- combinations.  Requires dim >= 4.
EvolutionSetup build_four_level_orthogonal(const Vec& a, const Vec& b,
                                           double energy, double hbar = 1.0);

}  // namespace qevo
