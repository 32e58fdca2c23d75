// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/entanglement.hpp"

#include <cmath>

namespace qevo {

namespace {

void require_two_qubit_state(const Vec& psi, const char* what) {
  if (psi.size() != 4) {
    throw WrongDimension(std::string(what) + ": expected a two-qubit state (dim 4)");
  }
  if (!is_normalized(psi)) {
    throw Infeasible(std::string(what) + ": state is not normalized");
  }
}

}  // namespace

double concurrence(const Vec& psi) {
  require_two_qubit_state(psi, "concurrence");
  // <psi| sigma_y (x) sigma_y |psi*> = -2 (a d - b c)^*; only the modulus
  // survives.
  Complex det = psi(0) * psi(3) - psi(1) * psi(2);
  return 2.0 * std::abs(det);
}

SchmidtDecomposition schmidt_decomposition(const Vec& psi, double tol) {
  require_two_qubit_state(psi, "schmidt_decomposition");
  Eigen::Matrix2cd amp;
  amp << psi(0), psi(1), psi(2), psi(3);  // amp(i_a, i_b)
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(amp, Eigen::ComputeFullU | Eigen::ComputeFullV);

  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.basis_a = svd.matrixU();
  // amp = U S V^H, so the B-side local states are the conjugated columns of V.
  out.basis_b = svd.matrixV().conjugate();
  out.schmidt_number = 0;
  for (int k = 0; k < 2; ++k) {
    if (out.coefficients(k) > tol) ++out.schmidt_number;
  }
  return out;
}

double geometric_measure(const Vec& psi) {
  SchmidtDecomposition sd = schmidt_decomposition(psi);
  double lmax = sd.coefficients(0);
  return 1.0 - lmax * lmax;
}

const Eigen::Matrix4cd& magic_basis() {
  static const Eigen::Matrix4cd m = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    Eigen::Matrix4cd b;
    // Columns: |00>+|11>, -i(|00>-|11>), |01>-|10>, -i(|01>+|10>), all / sqrt2.
    b << r, -i * r, 0, 0,
         0, 0, r, -i * r,
         0, 0, -r, -i * r,
         r, i * r, 0, 0;
    return b;
  }();
  return m;
}

Eigen::Vector4cd magic_basis_coords(const Vec& psi) {
  require_two_qubit_state(psi, "magic_basis_coords");
  return magic_basis().adjoint() * psi;
}

double linear_entropy(const Vec& psi) {
  require_two_qubit_state(psi, "linear_entropy");
  Mat rho = psi * psi.adjoint();
  Mat rho_a = partial_trace(rho, Subsystem::B, 2, 2);
  double purity = (rho_a * rho_a).trace().real();
  return 1.0 - purity;
}

EntanglementResult entanglement_summary(const Vec& psi) {
  SchmidtDecomposition sd = schmidt_decomposition(psi);
  double lmax = sd.coefficients(0);
  return {concurrence(psi), 1.0 - lmax * lmax, sd.coefficients, sd.schmidt_number};
}

}  // namespace qevo
