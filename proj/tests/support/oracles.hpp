// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent reference implementations used to cross-check the library.
// Everything here deliberately takes a different algorithmic route than the
// code under test: Taylor series instead of spectral decomposition, finite
// differences instead of moment formulas, explicit basis constants instead
// of shared helpers.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "qevo/linalg.hpp"

namespace qevo::testing {

using MatL = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
using VecL = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, 1>;

// Scaling-and-squaring Taylor exponential.  Works for double and long double
// scalars; accuracy is limited only by the scalar's epsilon since the scaled
// norm is kept below 1/4.
template <typename MatT>
MatT expm_taylor(const MatT& a) {
  using Scalar = typename MatT::Scalar;
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  const Eigen::Index n = a.rows();
  Real norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  Real scale = 1;
  while (norm * scale > Real(0.25)) {
    scale /= 2;
    ++squarings;
  }
  const MatT b = a * Scalar(scale);
  MatT sum = MatT::Identity(n, n);
  MatT term = MatT::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * b) / Real(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < std::numeric_limits<Real>::epsilon()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// exp(-i H t / hbar) via the Taylor route.
Mat propagator_oracle(const Mat& h, double t, double hbar = 1.0);

// Recursive adaptive Simpson quadrature.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

// Curvature of the parallel-transported evolution curve from fourth-order
// finite differences of the curve itself, computed in long double.  The
// curve is parametrized by arc length (the transported curve has speed
// dE/hbar in Hilbert space), where kappa^2 = |psi''|^2 - 1.
double fd_curvature(const Mat& h, const Vec& psi, double hbar = 1.0);

std::mt19937_64 make_rng(std::uint64_t seed);
Vec random_state(std::mt19937_64& rng, int dim);
Mat random_hermitian(std::mt19937_64& rng, int dim);
Mat random_unitary(std::mt19937_64& rng, int dim);
// Random U(2) x U(2) acting on two qubits.
Mat random_local_unitary(std::mt19937_64& rng);

// exp(-i [c1 XX + c2 YY + c3 ZZ]) built from literal Pauli matrices and the
// Taylor exponential.
Mat canonical_gate(double c1, double c2, double c3);

// Concurrence via |<psi|sigma_y x sigma_y|psi*>|.
double concurrence_sigma_yy(const Vec& psi);
// Concurrence via |sum_k mu_k^2| in a locally hand-coded magic basis.
double concurrence_magic(const Vec& psi);

}  // namespace qevo::testing
