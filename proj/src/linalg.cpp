// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qevo {

namespace {

void require_square(const Mat& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw WrongDimension(std::string(what) + ": operator must be square and nonempty");
  }
}

}  // namespace

bool is_hermitian(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  Mat d = m.adjoint() * m - Mat::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff() <= tol;
}

bool is_traceless(const Mat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return std::abs(m.trace()) <= tol;
}

bool is_normalized(const Vec& v, double tol) {
  return std::abs(v.norm() - 1.0) <= tol;
}

bool is_density_operator(const Mat& m, double tol) {
  if (!is_hermitian(m, tol)) return false;
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol) return false;
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -1e-12;
}

Vec normalized(const Vec& v) {
  double n = v.norm();
  if (n == 0.0) throw ZeroOperator("cannot normalize the zero vector");
  return v / n;
}

Mat tensor(const Mat& a, const Mat& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw WrongDimension("tensor: operands must be nonempty");
  }
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec tensor(const Vec& a, const Vec& b) {
  if (a.size() == 0 || b.size() == 0) {
    throw WrongDimension("tensor: operands must be nonempty");
  }
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Eigensystem hermitian_eigensystem(const Mat& h) {
  require_square(h, "hermitian_eigensystem");
  if (!is_hermitian(h)) {
    throw NotHermitian("hermitian_eigensystem: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eigen::VectorXd values = es.eigenvalues();
  Mat vectors = es.eigenvectors();
  const Eigen::Index n = values.size();

  // Degeneracy threshold scales with the spectral range; exact on the
  // all-zero operator.
  double scale = std::max(std::abs(values(0)), std::abs(values(n - 1)));
  double group_tol = 1e-9 * scale + 1e-14;

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && values(stop) - values(stop - 1) <= group_tol) ++stop;
    // Modified Gram-Schmidt inside the degenerate group keeps the output
    // deterministic regardless of how the solver rotated the subspace.
    for (Eigen::Index k = start; k < stop; ++k) {
      for (Eigen::Index j = start; j < k; ++j) {
        Complex ov = vectors.col(j).dot(vectors.col(k));
        vectors.col(k) -= ov * vectors.col(j);
      }
      vectors.col(k).normalize();
    }
    start = stop;
  }

  // Phase fix: largest-magnitude component (first such index on ties)
  // becomes real positive.
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index imax = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      double a = std::abs(vectors(i, k));
      if (a > best + 1e-15) {
        best = a;
        imax = i;
      }
    }
    Complex pivot = vectors(imax, k);
    if (std::abs(pivot) > 0.0) vectors.col(k) *= std::conj(pivot) / std::abs(pivot);
  }

  return {std::move(values), std::move(vectors)};
}

Mat propagator(const Mat& h, double t, double hbar) {
  require_square(h, "propagator");
  if (!is_hermitian(h)) throw NotHermitian("propagator: generator is not Hermitian");
  if (!(hbar > 0.0)) throw Infeasible("propagator: hbar must be positive");
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  const Mat& v = es.eigenvectors();
  Vec phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases(k) = std::exp(Complex(0.0, -w(k) * t / hbar));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

Mat partial_trace(const Mat& m, Subsystem traced_out, Eigen::Index dim_a,
                  Eigen::Index dim_b) {
  if (dim_a < 1 || dim_b < 1 || m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw DimensionMismatch("partial_trace: operator size does not match dim_a * dim_b");
  }
  if (traced_out == Subsystem::B) {
    Mat out = Mat::Zero(dim_a, dim_a);
    for (Eigen::Index i = 0; i < dim_a; ++i)
      for (Eigen::Index j = 0; j < dim_a; ++j)
        for (Eigen::Index k = 0; k < dim_b; ++k)
          out(i, j) += m(i * dim_b + k, j * dim_b + k);
    return out;
  }
  Mat out = Mat::Zero(dim_b, dim_b);
  for (Eigen::Index i = 0; i < dim_b; ++i)
    for (Eigen::Index j = 0; j < dim_b; ++j)
      for (Eigen::Index k = 0; k < dim_a; ++k)
        out(i, j) += m(k * dim_b + i, k * dim_b + j);
  return out;
}

double hilbert_schmidt_norm(const Mat& m) { return m.norm(); }

double spectral_norm(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(0);
}

}  // namespace qevo
