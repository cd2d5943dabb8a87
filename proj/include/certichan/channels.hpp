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

#pragma once

#include <vector>

#include "certichan/matrix_core.hpp"
#include "certichan/types.hpp"

namespace certichan {

/// Unit-norm state vector.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes);

  Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }

  /// Projector |psi><psi|.
  ComplexMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

 private:
  ComplexVector amplitudes_;
};

/// Hermitian, positive semidefinite, unit-trace operator.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix);

  Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Completely positive trace-preserving map in Kraus form. Kraus lists are
/// kept exactly as given; rank reduction happens only in support computations.
class QuantumChannel {
 public:
  explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

  Index in_dim() const { return kraus_.front().cols(); }
  Index out_dim() const { return kraus_.front().rows(); }
  Index kraus_count() const { return static_cast<Index>(kraus_.size()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

 private:
  std::vector<ComplexMatrix> kraus_;
};

QuantumChannel unitary_channel(const ComplexMatrix& u);

QuantumChannel identity_channel(Index dim);

/// Kraus operators sqrt(p_i) U_i. Probabilities must be strictly positive:
/// zero entries would silently shrink the channel support.
QuantumChannel mixed_unitary_channel(const std::vector<double>& probs,
                                     const std::vector<ComplexMatrix>& unitaries);

DensityMatrix apply(const QuantumChannel& c, const DensityMatrix& rho);

/// Channel with Kraus operators E_i (x) I_ref.
QuantumChannel extend_by_identity(const QuantumChannel& c, Index ref_dim);

/// n-fold tensor power, Kraus count grows as kraus_count^n.
QuantumChannel tensor_power(const QuantumChannel& c, Index n);

Subspace support(const QuantumChannel& c, const Tolerance& tol = Tolerance{});

/// Span of the union of all Kraus lists.
Subspace joint_support(const std::vector<QuantumChannel>& channels,
                       const Tolerance& tol = Tolerance{});

/// (c (x) 1_ref)(|psi><psi|); ref_dim = 1 means no reference system.
DensityMatrix output_state(const QuantumChannel& c, const PureState& psi, Index ref_dim);

/// (1/sqrt(d)) sum_t |t>|t> on dimension d^2.
PureState max_entangled(Index d);

/// (E (x) I_ref)|psi> without materializing the Kronecker factor.
ComplexVector apply_left_factor(const ComplexMatrix& e, const ComplexVector& psi,
                                Index ref_dim);

/// Schmidt rank of psi across the left_dim x ref_dim cut at tolerance `tol`.
Index schmidt_rank(const PureState& psi, Index left_dim, const Tolerance& tol = Tolerance{});

}  // namespace certichan
