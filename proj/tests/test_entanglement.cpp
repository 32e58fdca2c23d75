// Copyright 2026 The qevo authors
// SPDX-License-Identifier: Apache-2.0

#include "qevo/entanglement.hpp"

#include <cmath>

#include <doctest.h>

#include "qevo/errors.hpp"
#include "qevo/linalg.hpp"
#include "support/oracles.hpp"

using namespace qevo;
namespace qt = qevo::testing;

namespace {

Vec bell_phi_plus() {
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

Vec product_state(const Vec& qa, const Vec& qb) { return tensor(qa, qb); }

}  // namespace

TEST_CASE("concurrence endpoints: product states 0, Bell states 1") {
  Vec e0(2), e1(2);
  e0 << 1, 0;
  e1 << 0, 1;
  CHECK(concurrence(product_state(e0, e1)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(concurrence(bell_phi_plus()) == doctest::Approx(1.0));
  Vec psi_minus = Vec::Zero(4);
  psi_minus(1) = 1.0 / std::sqrt(2.0);
  psi_minus(2) = -1.0 / std::sqrt(2.0);
  CHECK(concurrence(psi_minus) == doctest::Approx(1.0));
}

TEST_CASE("three concurrence routes agree on random states") {
  auto rng = qt::make_rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const double direct = concurrence(psi);
    CHECK(std::abs(direct - qt::concurrence_sigma_yy(psi)) < 1e-9);
    CHECK(std::abs(direct - qt::concurrence_magic(psi)) < 1e-9);
  }
}

TEST_CASE("concurrence is invariant under local unitaries") {
  auto rng = qt::make_rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const Vec rotated = qt::random_local_unitary(rng) * psi;
    CHECK(std::abs(concurrence(psi) - concurrence(rotated)) < 1e-10);
  }
}

TEST_CASE("concurrence validates its input") {
  CHECK_THROWS_AS(concurrence(Vec(Vec::Ones(3))), WrongDimension);
  CHECK_THROWS_AS(concurrence(Vec(2.0 * bell_phi_plus())), Infeasible);
}

TEST_CASE("schmidt decomposition reconstructs the state") {
  auto rng = qt::make_rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const SchmidtDecomposition sd = schmidt_decomposition(psi);
    Vec rebuilt = Vec::Zero(4);
    for (int k = 0; k < 2; ++k) {
      rebuilt += sd.coefficients(k) *
                 tensor(Vec(sd.basis_a.col(k)), Vec(sd.basis_b.col(k)));
    }
    CHECK((rebuilt - psi).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(sd.coefficients(0) >= sd.coefficients(1));
    CHECK(sd.coefficients(0) * sd.coefficients(0) +
              sd.coefficients(1) * sd.coefficients(1) ==
          doctest::Approx(1.0));
    // Both local bases orthonormal.
    CHECK((sd.basis_a.adjoint() * sd.basis_a - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((sd.basis_b.adjoint() * sd.basis_b - Eigen::Matrix2cd::Identity())
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("schmidt number distinguishes product from entangled states") {
  Vec e0(2), plus(2);
  e0 << 1, 0;
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(schmidt_decomposition(product_state(e0, plus)).schmidt_number == 1);
  CHECK(schmidt_decomposition(bell_phi_plus()).schmidt_number == 2);
}

TEST_CASE("schmidt coefficients tie to concurrence: C = 2 l1 l2") {
  auto rng = qt::make_rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const SchmidtDecomposition sd = schmidt_decomposition(psi);
    CHECK(std::abs(concurrence(psi) -
                   2.0 * sd.coefficients(0) * sd.coefficients(1)) < 1e-10);
  }
}

TEST_CASE("geometric measure equals 1 - largest squared Schmidt coefficient") {
  auto rng = qt::make_rng(113);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const SchmidtDecomposition sd = schmidt_decomposition(psi);
    const double lmax = sd.coefficients(0);
    CHECK(std::abs(geometric_measure(psi) - (1.0 - lmax * lmax)) < 1e-10);
    const double c = concurrence(psi);
    CHECK(std::abs(geometric_measure(psi) -
                   0.5 * (1.0 - std::sqrt(1.0 - c * c))) < 1e-9);
  }
  CHECK(geometric_measure(bell_phi_plus()) == doctest::Approx(0.5));
}

TEST_CASE("magic basis is unitary and its coordinates give the concurrence") {
  const Eigen::Matrix4cd& m = magic_basis();
  CHECK((m.adjoint() * m - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() <
        1e-15);
  auto rng = qt::make_rng(127);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const Eigen::Vector4cd mu = magic_basis_coords(psi);
    Complex sum = 0;
    for (int k = 0; k < 4; ++k) sum += mu(k) * mu(k);
    CHECK(std::abs(std::abs(sum) - concurrence(psi)) < 1e-10);
  }
}

TEST_CASE("linear entropy is C^2 / 2 for two-qubit pure states") {
  auto rng = qt::make_rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec psi = qt::random_state(rng, 4);
    const double c = concurrence(psi);
    CHECK(std::abs(linear_entropy(psi) - 0.5 * c * c) < 1e-10);
  }
  CHECK(linear_entropy(bell_phi_plus()) == doctest::Approx(0.5));
}

TEST_CASE("entanglement_summary bundles the individual measures") {
  auto rng = qt::make_rng(137);
  const Vec psi = qt::random_state(rng, 4);
  const EntanglementResult r = entanglement_summary(psi);
  CHECK(r.concurrence == doctest::Approx(concurrence(psi)));
  CHECK(r.geometric_measure == doctest::Approx(geometric_measure(psi)));
  CHECK(r.schmidt_number == schmidt_decomposition(psi).schmidt_number);
}
