// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qevo/errors.hpp"

namespace qevo {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Default tolerances for the structural predicates.  Values looser than
// these are treated as genuine violations, not roundoff.
inline constexpr double kPredicateTol = 1e-10;
inline constexpr double kStateNormTol = 1e-10;

bool is_hermitian(const Mat& m, double tol = kPredicateTol);
bool is_unitary(const Mat& m, double tol = kPredicateTol);
bool is_traceless(const Mat& m, double tol = kPredicateTol);
bool is_normalized(const Vec& v, double tol = kStateNormTol);
// Hermitian, unit trace, eigenvalues >= -1e-12.
bool is_density_operator(const Mat& m, double tol = kPredicateTol);

// Returns v / ||v||.  Throws ZeroOperator if ||v|| == 0.
Vec normalized(const Vec& v);

// Kronecker products with row-major composite indexing: the pair (i_a, i_b)
// maps to index i_a * dim_b + i_b.
Mat tensor(const Mat& a, const Mat& b);
Vec tensor(const Vec& a, const Vec& b);

struct Eigensystem {
  Eigen::VectorXd values;  // ascending
  Mat vectors;             // column k pairs with values[k]
};

// Eigendecomposition of a Hermitian operator with deterministic output:
// eigenvalues ascending, degenerate groups re-orthonormalized by modified
// Gram-Schmidt in solver order, and each vector's phase fixed so that its
// largest-magnitude component is real positive.
Eigensystem hermitian_eigensystem(const Mat& h);

// U(t) = exp(-i H t / hbar) by spectral decomposition.
Mat propagator(const Mat& h, double t, double hbar = 1.0);

enum class Subsystem { A, B };

// Traces out the given subsystem of an operator on H_A (x) H_B.
// m must be (dim_a * dim_b) square.
Mat partial_trace(const Mat& m, Subsystem traced_out, Eigen::Index dim_a,
                  Eigen::Index dim_b);

// sqrt(sum |m_ij|^2); no dimensional normalization, so any d-dimensional
// unitary has norm sqrt(d).
double hilbert_schmidt_norm(const Mat& m);

// Largest singular value.
double spectral_norm(const Mat& m);

}  // namespace qevo
