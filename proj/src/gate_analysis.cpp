// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/gate_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "qevo/entanglement.hpp"

namespace qevo {

namespace {

void require_gate(const Mat& u, Eigen::Index dim, const char* what) {
  if (u.rows() != dim || u.cols() != dim) {
    throw WrongDimension(std::string(what) + ": unexpected operator size");
  }
  if (!is_unitary(u, kGateUnitaryTol)) {
    throw NotUnitary(std::string(what) + ": operator is not unitary");
  }
}

double rem_euclid(double x, double m) {
  double r = std::fmod(x, m);
  return r < 0.0 ? r + m : r;
}

// splitmix64; good enough for Monte Carlo and fully portable, which keeps
// CLI output byte-identical across platforms.
std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) {
  return static_cast<double>(mix64(state) >> 11) * 0x1.0p-53;
}

// Two standard normals by Box-Muller (u1 shifted into (0, 1]).
std::array<double, 2> normal_pair(std::uint64_t& state) {
  double u1 = 1.0 - uniform01(state);
  double u2 = uniform01(state);
  double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

Eigen::Vector2cd haar_qubit(std::uint64_t& state) {
  while (true) {
    auto [g0, g1] = normal_pair(state);
    auto [g2, g3] = normal_pair(state);
    Eigen::Vector2cd v(Complex(g0, g1), Complex(g2, g3));
    double n = v.norm();
    if (n > 1e-12) return v / n;
  }
}

}  // namespace

double yukalov_production(const Mat& u, Eigen::Index dim_a, Eigen::Index dim_b) {
  require_gate(u, dim_a * dim_b, "yukalov_production");
  Complex tr = u.trace();
  if (std::abs(tr) <= kTraceTol) {
    throw TracelessPropagator(
        "yukalov_production: |Tr U| vanishes, the production measure diverges");
  }
  Mat ua = partial_trace(u, Subsystem::B, dim_a, dim_b);
  Mat ub = partial_trace(u, Subsystem::A, dim_a, dim_b);
  // || (U_A (x) U_B) / Tr U || = ||U_A|| ||U_B|| / |Tr U|.
  return std::log(hilbert_schmidt_norm(u) * std::abs(tr) /
                  (hilbert_schmidt_norm(ua) * hilbert_schmidt_norm(ub)));
}

double zanardi_power_canonical(const CVector& c) {
  double f1 = std::cos(4.0 * c.c1);
  double f2 = std::cos(4.0 * c.c2);
  double f3 = std::cos(4.0 * c.c3);
  return (3.0 - (f1 * f2 + f2 * f3 + f3 * f1)) / 18.0;
}

WeylCoordinates weyl_cvector(const Mat& u) {
  require_gate(u, 4, "weyl_cvector");

  // Land in SU(4) first; the principal quartic root keeps the map
  // deterministic.
  Complex det = u.determinant();
  Mat usu = u * std::exp(Complex(0.0, -std::arg(det) / 4.0)) /
            std::pow(std::abs(det), 0.25);

  const Eigen::Matrix4cd& mb = magic_basis();
  Mat m = mb.adjoint() * usu * mb;
  Mat gram = m.transpose() * m;

  Eigen::ComplexEigenSolver<Mat> es(gram);
  if (es.info() != Eigen::Success) {
    throw Infeasible("weyl_cvector: eigensolver failed");
  }
  std::array<double, 4> phases;
  for (int k = 0; k < 4; ++k) phases[k] = std::arg(es.eigenvalues()(k));
  // Descending phase order is the documented tie-break for degenerate
  // spectra; any consistent assignment lands on the same folded point.
  std::stable_sort(phases.begin(), phases.end(), std::greater<double>());

  // gram's eigenvalues are exp(-2 i theta_k) with theta_k linear in the c's
  // and summing to zero mod pi; restore the sum constraint before solving.
  std::array<double, 4> theta;
  for (int k = 0; k < 3; ++k) theta[k] = -phases[k] / 2.0;
  theta[3] = -(theta[0] + theta[1] + theta[2]);

  CVector raw{rem_euclid((theta[0] + theta[3]) / 2.0, 2.0 * M_PI),
              rem_euclid((theta[1] + theta[3]) / 2.0, 2.0 * M_PI),
              rem_euclid((theta[2] + theta[3]) / 2.0, 2.0 * M_PI)};

  std::array<double, 3> f;
  for (int k = 0; k < 3; ++k) {
    double c = rem_euclid(k == 0 ? raw.c1 : (k == 1 ? raw.c2 : raw.c3), M_PI / 2.0);
    f[k] = std::min(c, M_PI / 2.0 - c);
  }
  std::sort(f.begin(), f.end(), std::greater<double>());
  return {raw, {f[0], f[1], f[2]}};
}

McEstimate entangling_power_mc(const Mat& u, int n_samples, std::uint64_t seed) {
  require_gate(u, 4, "entangling_power_mc");
  if (n_samples < 1000) {
    throw Infeasible("entangling_power_mc: need at least 1000 samples");
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    // Per-sample stream derived from (seed, i): partition-independent.
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (static_cast<std::uint64_t>(i) + 1));
    Eigen::Vector2cd qa = haar_qubit(state);
    Eigen::Vector2cd qb = haar_qubit(state);
    Vec psi = u * tensor(Vec(qa), Vec(qb));
    double le = linear_entropy(normalized(psi));
    sum += le;
    sum_sq += le * le;
  }
  double mean = sum / n_samples;
  double var = std::max(0.0, (sum_sq - n_samples * mean * mean) / (n_samples - 1));
  return {mean, std::sqrt(var / n_samples), n_samples, seed};
}

int operator_schmidt_number(const Mat& u, double tol) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw WrongDimension("operator_schmidt_number: expected a 4x4 operator");
  }
  Mat r(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          r(2 * i + j, 2 * k + l) = u(2 * i + k, 2 * j + l);
  Eigen::JacobiSVD<Mat> svd(r);
  const auto& sv = svd.singularValues();
  double top = sv(0);
  if (top <= 0.0) return 0;
  int count = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv(k) > tol * top) ++count;
  }
  return count;
}

PropagatorAnalysis analyze_gate(const Mat& u, int n_samples, std::uint64_t seed) {
  require_gate(u, 4, "analyze_gate");
  PropagatorAnalysis out;
  try {
    out.yukalov = yukalov_production(u);
  } catch (const TracelessPropagator&) {
    out.yukalov = std::nullopt;
  }
  WeylCoordinates wc = weyl_cvector(u);
  out.c_vector = wc.folded;
  out.c_vector_raw = wc.raw;
  out.zanardi = zanardi_power_canonical(wc.folded);
  out.operator_schmidt_number = operator_schmidt_number(u);
  if (n_samples > 0) {
    out.monte_carlo = entangling_power_mc(u, n_samples, seed);
  }
  return out;
}

}  // namespace qevo
