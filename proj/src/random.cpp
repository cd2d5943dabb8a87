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

#include "certichan/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <numbers>

namespace certichan {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index)));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform01(rng);
  while (u1 <= 0.0) u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng) {
  ComplexMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = Complex(standard_normal(rng), standard_normal(rng));
    }
  }
  return g;
}

PureState haar_state(Index dim, std::mt19937_64& rng) {
  ComplexVector v = ginibre(dim, 1, rng).col(0);
  while (v.norm() < 1e-12) v = ginibre(dim, 1, rng).col(0);
  v /= v.norm();
  return PureState(std::move(v));
}

ComplexMatrix haar_unitary(Index dim, std::mt19937_64& rng) {
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution is Haar, not QR-biased.
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

QuantumChannel random_channel(Index in_dim, Index out_dim, Index kraus_rank,
                              std::mt19937_64& rng) {
  if (kraus_rank <= 0 || kraus_rank * out_dim < in_dim) {
    throw std::invalid_argument("random_channel: kraus_rank*out_dim must cover in_dim");
  }
  // Gram-Schmidt a Ginibre matrix into an isometry, then slice its rows.
  const ComplexMatrix g = ginibre(kraus_rank * out_dim, in_dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix iso =
      qr.householderQ() * ComplexMatrix::Identity(kraus_rank * out_dim, in_dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(static_cast<size_t>(kraus_rank));
  for (Index k = 0; k < kraus_rank; ++k) {
    kraus.push_back(iso.middleRows(k * out_dim, out_dim));
  }
  return QuantumChannel(std::move(kraus));
}

std::vector<ComplexMatrix> random_povm_effects(Index dim, Index effect_count,
                                               std::mt19937_64& rng) {
  if (dim <= 0 || effect_count <= 0) {
    throw std::invalid_argument("random_povm_effects: dimensions must be positive");
  }
  std::vector<ComplexMatrix> raw;
  raw.reserve(static_cast<size_t>(effect_count));
  ComplexMatrix total = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < effect_count; ++i) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix a = g * g.adjoint();
    total += a;
    raw.push_back(std::move(a));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(total);
  const ComplexMatrix inv_sqrt =
      es.eigenvectors() *
      es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal().toDenseMatrix().cast<Complex>() *
      es.eigenvectors().adjoint();
  std::vector<ComplexMatrix> effects;
  effects.reserve(raw.size());
  for (auto& a : raw) {
    ComplexMatrix m = inv_sqrt * a * inv_sqrt;
    m = 0.5 * (m + m.adjoint().eval());
    effects.push_back(std::move(m));
  }
  return effects;
}

std::vector<ComplexMatrix> random_rank_one_povm_effects(Index dim, Index effect_count,
                                                        std::mt19937_64& rng) {
  if (effect_count < dim) {
    throw std::invalid_argument("random_rank_one_povm_effects: need at least dim effects");
  }
  const ComplexMatrix g = ginibre(effect_count, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix iso = qr.householderQ() * ComplexMatrix::Identity(effect_count, dim);
  std::vector<ComplexMatrix> effects;
  effects.reserve(static_cast<size_t>(effect_count));
  for (Index i = 0; i < effect_count; ++i) {
    const ComplexVector row = iso.row(i).adjoint();  // sum_i row row^dag = I_dim
    effects.push_back(row * row.adjoint());
  }
  return effects;
}

}  // namespace certichan
