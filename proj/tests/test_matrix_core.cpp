// Copyright 2026 The certichan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "certichan/matrix_core.hpp"
#include "certichan/random.hpp"
#include "test_support.hpp"

using namespace certichan;
using namespace certichan::testing;

TEST_CASE("kron identity and diagonal cases") {
  CHECK(matrix_near(kron(identity2(), identity2()), ComplexMatrix::Identity(4, 4)));

  ComplexMatrix d12(2, 2), d3(1, 1);
  d12 << 1, 0, 0, 2;
  d3 << 3;
  ComplexMatrix expected(2, 2);
  expected << 3, 0, 0, 6;
  CHECK(matrix_near(kron(d12, d3), expected));
}

TEST_CASE("kron of X with X maps |00> to |11>") {
  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  const ComplexVector ket00 = basis_vector(4, 0);
  CHECK((xx * ket00 - basis_vector(4, 3)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("kron enforces the dimension limit") {
  const ComplexMatrix tall = ComplexMatrix::Ones(1 << 11, 1);
  CHECK_THROWS_AS(kron(tall, tall), DimensionLimitError);
  CHECK_NOTHROW(kron(tall, tall, Index{1} << 22));
}

TEST_CASE("span_of collapses duplicates and counts independent operators") {
  CHECK(span_of({identity2(), identity2()}).count() == 1);
  CHECK(span_of({identity2(), pauli_x()}).count() == 2);

  // Rank oracle: Gaussian elimination on the vectorized stack.
  const std::vector<ComplexMatrix> ops = {identity2(), pauli_x(),
                                          identity2() + pauli_x()};
  CHECK(gauss_rank_of_operators(ops) == 2);
  CHECK(span_of(ops).count() == 2);
}

TEST_CASE("span_of rejects bad input") {
  CHECK_THROWS_AS(span_of({}), std::invalid_argument);
  CHECK_THROWS_AS(span_of({identity2(), ComplexMatrix::Identity(3, 3)}),
                  std::invalid_argument);
}

TEST_CASE("span_of is deterministic with a fixed phase convention") {
  auto rng = substream(7, 0);
  const std::vector<ComplexMatrix> ops = {ginibre(3, 3, rng), ginibre(3, 3, rng)};
  const Subspace a = span_of(ops);
  const Subspace b = span_of(ops);
  CHECK(matrix_near(a.basis(), b.basis(), 0.0));
  for (Index c = 0; c < a.count(); ++c) {
    Index arg_max = 0;
    a.basis().col(c).cwiseAbs().maxCoeff(&arg_max);
    const Complex top = a.basis()(arg_max, c);
    CHECK(top.real() > 0.0);
    CHECK(std::abs(top.imag()) < 1e-12);
  }
}

TEST_CASE("subspace_contains on hand-built spans") {
  const Subspace ix = span_of({identity2(), pauli_x()});
  const Subspace x_only = span_of({pauli_x()});
  const Subspace sum_only = span_of({identity2() + pauli_x()});

  CHECK(subspace_contains(ix, x_only));
  CHECK_FALSE(subspace_contains(x_only, ix));
  CHECK(subspace_contains(ix, sum_only));

  const Subspace wrong_dim = span_of({ComplexMatrix::Identity(3, 3)});
  CHECK_THROWS_AS(subspace_contains(ix, wrong_dim), std::invalid_argument);
}

TEST_CASE("membership property: any combination lies in the span") {
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    auto rng = substream(101, rep);
    const Index rows = 2 + static_cast<Index>(rng() % 3);
    const Index cols = 2 + static_cast<Index>(rng() % 2);
    const Index n_ops = 1 + static_cast<Index>(rng() % 4);
    std::vector<ComplexMatrix> ops;
    for (Index i = 0; i < n_ops; ++i) ops.push_back(ginibre(rows, cols, rng));
    ComplexMatrix combo = ComplexMatrix::Zero(rows, cols);
    for (const auto& op : ops) {
      combo += Complex(standard_normal(rng), standard_normal(rng)) * op;
    }
    const Subspace big = span_of(ops);
    CHECK(subspace_contains(big, span_of({combo})));
    CHECK(big.count() <= std::min<Index>(n_ops, rows * cols));
  }
}

TEST_CASE("projector_onto examples") {
  CHECK(matrix_near(projector_onto(span_of({ComplexMatrix(basis_vector(2, 0))})),
                    (ComplexMatrix(2, 2) << 1, 0, 0, 0).finished()));
  CHECK(matrix_near(projector_onto(span_of({identity2(), pauli_x(), pauli_y(), pauli_z()})),
                    ComplexMatrix::Identity(4, 4), 1e-10));

  ComplexMatrix plus(2, 1);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  ComplexMatrix expected(2, 2);
  expected << 0.5, 0.5, 0.5, 0.5;
  CHECK(matrix_near(projector_onto(span_of({plus})), expected, 1e-12));
}

TEST_CASE("projectors are Hermitian idempotent with trace = dimension") {
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    auto rng = substream(202, rep);
    std::vector<ComplexMatrix> ops;
    const Index n_ops = 1 + static_cast<Index>(rng() % 3);
    for (Index i = 0; i < n_ops; ++i) ops.push_back(ginibre(3, 2, rng));
    const Subspace s = span_of(ops);
    const ComplexMatrix p = projector_onto(s);
    CHECK(max_abs(p - p.adjoint()) < 1e-12);
    CHECK(max_abs(p * p - p) <= 100.0 * std::max(s.tol(), 1e-12));
    CHECK(std::abs(p.trace().real() - static_cast<double>(s.count())) < 1e-9);
    for (Index c = 0; c < s.count(); ++c) {
      CHECK((p * s.basis().col(c) - s.basis().col(c)).norm() < 1e-10);
    }
  }
}

TEST_CASE("nu_distance on hand-checked unitaries") {
  CHECK(nu_distance(identity2()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(nu_distance(pauli_z()) == doctest::Approx(0.0).epsilon(1e-12));

  ComplexMatrix u(2, 2);
  u << 1, 0, 0, Complex(0, 1);
  CHECK(nu_distance(u) == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-9));

  // Three cube-roots of unity surround the origin.
  ComplexMatrix w = ComplexMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    w(k, k) = std::exp(Complex(0.0, 2.0 * std::numbers::pi * k / 3.0));
  }
  CHECK(nu_distance(w) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(nu_distance(2.0 * identity2()), std::invalid_argument);
}

TEST_CASE("nu_distance against brute-force state sampling") {
  ComplexMatrix u(2, 2);
  u << 1, 0, 0, Complex(0, 1);
  auto rng = substream(303, 0);
  double sampled_min = 1.0;
  for (int s = 0; s < 100000; ++s) {
    const PureState psi = haar_state(2, rng);
    const Complex val = (psi.amplitudes().adjoint() * u * psi.amplitudes())(0, 0);
    sampled_min = std::min(sampled_min, std::abs(val));
  }
  CHECK(std::abs(sampled_min - nu_distance(u)) < 1e-3);
}

TEST_CASE("nu_distance is invariant under unitary similarity") {
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    auto rng = substream(404, rep);
    const Index dim = 2 + static_cast<Index>(rng() % 3);
    const ComplexMatrix u = haar_unitary(dim, rng);
    const ComplexMatrix v = haar_unitary(dim, rng);
    CHECK(std::abs(nu_distance(u) - nu_distance(v * u * v.adjoint())) < 1e-9);
  }
}

TEST_CASE("nu_distance matches chord geometry for qubit unitaries") {
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    auto rng = substream(505, rep);
    const double theta1 = 2.0 * std::numbers::pi * (uniform01(rng) - 0.5);
    double theta2 = theta1 + std::numbers::pi * uniform01(rng);  // gap within pi
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::exp(Complex(0.0, theta1));
    u(1, 1) = std::exp(Complex(0.0, theta2));
    const ComplexMatrix v = haar_unitary(2, rng);
    const double expected = std::cos(std::abs(theta2 - theta1) / 2.0);
    CHECK(std::abs(nu_distance(v * u * v.adjoint()) - expected) < 1e-9);
  }
}

TEST_CASE("column_space agrees with the elimination oracle on PSD matrices") {
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    auto rng = substream(606, rep);
    const Index dim = 3 + static_cast<Index>(rng() % 2);
    const Index rank = 1 + static_cast<Index>(rng() % dim);
    const ComplexMatrix g = ginibre(dim, rank, rng);
    const ComplexMatrix psd = g * g.adjoint();
    CHECK(column_space(psd).count() == rank);
    std::vector<ComplexVector> cols;
    for (Index c = 0; c < dim; ++c) cols.push_back(psd.col(c));
    CHECK(gauss_rank(cols, 1e-8 * std::max(1.0, max_abs(psd))) == rank);
  }
}
