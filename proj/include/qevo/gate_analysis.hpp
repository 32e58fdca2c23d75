// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "qevo/linalg.hpp"

namespace qevo {

// |Tr U| at or below this makes the Yukalov ratio undefined.
inline constexpr double kTraceTol = 1e-9;
// Unitarity tolerance for gate-level analyses.
inline constexpr double kGateUnitaryTol = 1e-9;
// Relative singular-value cutoff for the operator Schmidt rank.
inline constexpr double kOperatorSchmidtTol = 1e-8;

// Entanglement production of a bipartite propagator:
//   ln( ||U|| |Tr U| / (||Tr_B U|| ||Tr_A U||) )
// with unnormalized Hilbert-Schmidt norms.  Vanishes iff U factorizes into
// a product of local propagators.  Throws TracelessPropagator when
// |Tr U| <= kTraceTol (the ratio diverges there; it is reported, not
// silently returned as infinity).
double yukalov_production(const Mat& u, Eigen::Index dim_a = 2,
                          Eigen::Index dim_b = 2);

struct CVector {
  double c1;
  double c2;
  double c3;
};

// Haar-average linear entropy produced on product states by the canonical
// two-qubit gate exp(-i (c1 XX + c2 YY + c3 ZZ)):
//   (3 - [cos4c1 cos4c2 + cos4c2 cos4c3 + cos4c3 cos4c1]) / 18.
// Invariant under the Weyl chamber symmetries, so folding does not matter.
double zanardi_power_canonical(const CVector& c);

struct WeylCoordinates {
  CVector raw;     // one representative of the symmetry orbit, in [0, 2 pi)
  CVector folded;  // canonical point: pi/4 >= c1 >= c2 >= c3 >= 0
};

// Canonical interaction coordinates of a two-qubit gate, from the spectrum
// of m^T m in the magic basis after det-normalization.  Eigenphase ties are
// broken by sorting descending, and the result is folded into the chamber
// by the c -> pi/2 - c and permutation symmetries.
WeylCoordinates weyl_cvector(const Mat& u);

struct McEstimate {
  double estimate;
  double std_error;
  int n_samples;
  std::uint64_t seed;
};

// Monte Carlo entangling power: mean linear entropy of U applied to Haar
// product states.  Each sample draws from its own counter-derived stream,
// so the estimate is reproducible and independent of any partitioning of
// the sample range.
McEstimate entangling_power_mc(const Mat& u, int n_samples, std::uint64_t seed);

// Number of terms in U = sum_k A_k (x) B_k: the rank of the realigned
// matrix R[(i,j),(k,l)] = U[(i,k),(j,l)], with singular values below
// tol * sigma_max counted as zero.
int operator_schmidt_number(const Mat& u, double tol = kOperatorSchmidtTol);

struct PropagatorAnalysis {
  std::optional<double> yukalov;  // absent when Tr U vanishes
  double zanardi;
  std::optional<CVector> c_vector;  // folded; absent if extraction failed
  std::optional<CVector> c_vector_raw;
  int operator_schmidt_number;
  std::optional<McEstimate> monte_carlo;
};

// Full gate-level summary; Monte Carlo is run when n_samples > 0.
PropagatorAnalysis analyze_gate(const Mat& u, int n_samples = 0,
                                std::uint64_t seed = 0);

}  // namespace qevo
