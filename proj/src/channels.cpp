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

#include "certichan/channels.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

namespace certichan {

PureState::PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) {
    throw std::invalid_argument("PureState: dimension must be positive");
  }
  if (!amplitudes_.allFinite()) {
    throw std::invalid_argument("PureState: amplitudes must be finite");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("PureState: amplitudes must have unit norm");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 || matrix_.rows() != matrix_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square and nonempty");
  }
  require_finite(matrix_, "DensityMatrix");
  if (max_abs(matrix_ - matrix_.adjoint()) > 1e-10) {
    throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace().real() - 1.0) > 1e-9 || std::abs(matrix_.trace().imag()) > 1e-9) {
    throw std::invalid_argument("DensityMatrix: trace must equal one");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
  }
}

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw std::invalid_argument("QuantumChannel: Kraus list must be nonempty");
  }
  const Index rows = kraus_.front().rows();
  const Index cols = kraus_.front().cols();
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("QuantumChannel: Kraus operators must be nonempty");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
  for (const auto& e : kraus_) {
    if (e.rows() != rows || e.cols() != cols) {
      throw std::invalid_argument("QuantumChannel: Kraus operators must share one shape");
    }
    require_finite(e, "QuantumChannel");
    sum += e.adjoint() * e;
  }
  sum -= ComplexMatrix::Identity(cols, cols);
  if (max_abs(sum) > 1e-9) {
    throw std::invalid_argument("QuantumChannel: Kraus operators are not trace preserving");
  }
}

QuantumChannel unitary_channel(const ComplexMatrix& u) {
  if (unitarity_defect(u) > 1e-9) {
    throw std::invalid_argument("unitary_channel: input is not unitary within 1e-9");
  }
  return QuantumChannel({u});
}

QuantumChannel identity_channel(Index dim) {
  return QuantumChannel({ComplexMatrix::Identity(dim, dim)});
}

QuantumChannel mixed_unitary_channel(const std::vector<double>& probs,
                                     const std::vector<ComplexMatrix>& unitaries) {
  if (probs.empty() || probs.size() != unitaries.size()) {
    throw std::invalid_argument("mixed_unitary_channel: need one probability per unitary");
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mixed_unitary_channel: probabilities must sum to one");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(probs.size());
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) {
      throw std::invalid_argument(
          "mixed_unitary_channel: probabilities must be strictly positive");
    }
    if (unitarity_defect(unitaries[i]) > 1e-9) {
      throw std::invalid_argument("mixed_unitary_channel: matrix " + std::to_string(i) +
                                  " is not unitary within 1e-9");
    }
    if (unitaries[i].rows() != unitaries.front().rows()) {
      throw std::invalid_argument("mixed_unitary_channel: unitaries must share one dimension");
    }
    kraus.push_back(std::sqrt(probs[i]) * unitaries[i]);
  }
  return QuantumChannel(std::move(kraus));
}

DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho) {
  if (rho.dim() != c.in_dim()) {
    throw std::invalid_argument("apply: state dimension does not match channel input");
  }
  ComplexMatrix out = ComplexMatrix::Zero(c.out_dim(), c.out_dim());
  for (const auto& e : c.kraus()) {
    out += e * rho.matrix() * e.adjoint();
  }
  // Symmetrize away rounding noise before the invariant checks.
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out));
}

QuantumChannel extend_by_identity(const QuantumChannel& c, Index ref_dim) {
  if (ref_dim <= 0) {
    throw std::invalid_argument("extend_by_identity: reference dimension must be positive");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(ref_dim, ref_dim);
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(c.kraus().size());
  for (const auto& e : c.kraus()) {
    kraus.push_back(kron(e, id));
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel tensor_power(const QuantumChannel& c, Index n) {
  if (n <= 0) {
    throw std::invalid_argument("tensor_power: exponent must be positive");
  }
  std::vector<ComplexMatrix> kraus = c.kraus();
  for (Index step = 1; step < n; ++step) {
    std::vector<ComplexMatrix> next;
    next.reserve(kraus.size() * c.kraus().size());
    for (const auto& left : kraus) {
      for (const auto& right : c.kraus()) {
        next.push_back(kron(left, right));
      }
    }
    kraus = std::move(next);
  }
  return QuantumChannel(std::move(kraus));
}

Subspace support(const QuantumChannel& c, const Tolerance& tol) {
  return span_of(c.kraus(), tol);
}

Subspace joint_support(const std::vector<QuantumChannel>& channels, const Tolerance& tol) {
  if (channels.empty()) {
    throw std::invalid_argument("joint_support: channel list must be nonempty");
  }
  std::vector<ComplexMatrix> all;
  for (const auto& c : channels) {
    if (c.in_dim() != channels.front().in_dim() ||
        c.out_dim() != channels.front().out_dim()) {
      throw std::invalid_argument("joint_support: channels must share one shape");
    }
    all.insert(all.end(), c.kraus().begin(), c.kraus().end());
  }
  return span_of(all, tol);
}

ComplexVector apply_left_factor(const ComplexMatrix& e, const ComplexVector& psi,
                                Index ref_dim) {
  if (psi.size() != e.cols() * ref_dim) {
    throw std::invalid_argument("apply_left_factor: dimension mismatch");
  }
  // psi indexed as a*ref_dim + b; (E (x) I) acts on the slow index.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      reshaped(psi.data(), e.cols(), ref_dim);
  Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> mapped =
      e * reshaped;
  return Eigen::Map<const ComplexVector>(mapped.data(), mapped.size());
}

DensityMatrix output_state(const QuantumChannel& c, const PureState& psi, Index ref_dim) {
  if (ref_dim <= 0 || psi.dim() != c.in_dim() * ref_dim) {
    throw std::invalid_argument(
        "output_state: state dimension must equal channel input times reference");
  }
  if (c.out_dim() * ref_dim > kDefaultDimensionLimit) {
    throw DimensionLimitError("output_state: output space exceeds dimension limit");
  }
  ComplexMatrix out = ComplexMatrix::Zero(c.out_dim() * ref_dim, c.out_dim() * ref_dim);
  for (const auto& e : c.kraus()) {
    const ComplexVector v = apply_left_factor(e, psi.amplitudes(), ref_dim);
    out += v * v.adjoint();
  }
  out = 0.5 * (out + out.adjoint().eval());
  return DensityMatrix(std::move(out));
}

PureState max_entangled(Index d) {
  if (d <= 0) {
    throw std::invalid_argument("max_entangled: dimension must be positive");
  }
  if (d * d > kDefaultDimensionLimit) {
    throw DimensionLimitError("max_entangled: state space exceeds dimension limit");
  }
  ComplexVector amps = ComplexVector::Zero(d * d);
  const double coeff = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index t = 0; t < d; ++t) {
    amps(t * d + t) = coeff;
  }
  return PureState(std::move(amps));
}

Index schmidt_rank(const PureState& psi, Index left_dim, const Tolerance& tol) {
  if (left_dim <= 0 || psi.dim() % left_dim != 0) {
    throw std::invalid_argument("schmidt_rank: left dimension must divide state dimension");
  }
  const Index ref_dim = psi.dim() / left_dim;
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
      reshaped(psi.amplitudes().data(), left_dim, ref_dim);
  Eigen::JacobiSVD<ComplexMatrix> svd(reshaped);
  const auto& sigma = svd.singularValues();
  const double cut = tol.cut_for(sigma.size() > 0 ? sigma(0) : 0.0);
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cut) ++rank;
  return rank;
}

}  // namespace certichan
