// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "qevo/linalg.hpp"

namespace qevo {

// Singular values below this count as vanishing Schmidt coefficients.
inline constexpr double kSchmidtTol = 1e-8;

// Pure two-qubit state concurrence |<psi| sigma_y (x) sigma_y |psi*>|.
// Requires dim 4 and unit norm.
double concurrence(const Vec& psi);

struct SchmidtDecomposition {
  Eigen::Vector2d coefficients;   // descending, sum of squares 1
  Eigen::Matrix2cd basis_a;       // column k: local state paired with coefficients[k]
  Eigen::Matrix2cd basis_b;
  int schmidt_number;             // coefficients above kSchmidtTol
};

// psi = sum_k coefficients[k] * basis_a.col(k) (x) basis_b.col(k).
SchmidtDecomposition schmidt_decomposition(const Vec& psi, double tol = kSchmidtTol);

// 1 - Lambda_max^2 where Lambda_max is the largest Schmidt coefficient.
// Range [0, 1/2]; equals (1 - sqrt(1 - C^2)) / 2.
double geometric_measure(const Vec& psi);

// Unitary whose columns are the magic basis states: the Bell basis with
// phases chosen so that coordinates of real combinations stay real under
// local SU(2) rotations.
const Eigen::Matrix4cd& magic_basis();

// Coordinates mu_k = <Phi_k|psi> in the magic basis.
// |sum_k mu_k^2| equals the concurrence.
Eigen::Vector4cd magic_basis_coords(const Vec& psi);

// 1 - Tr[rho_A^2]; equals C^2 / 2 for pure two-qubit states.
double linear_entropy(const Vec& psi);

struct EntanglementResult {
  double concurrence;
  double geometric_measure;
  Eigen::Vector2d schmidt_coefficients;
  int schmidt_number;
};

EntanglementResult entanglement_summary(const Vec& psi);

}  // namespace qevo
