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

#include "certichan/types.hpp"

namespace certichan {

/// Orthonormal basis of a subspace of C^ambient_dim.
///
/// `tol` records the absolute singular-value threshold that was actually used
/// to decide the numerical rank when the basis was computed. Basis columns
/// carry a fixed phase convention (largest-magnitude entry real positive) so
/// repeated runs produce identical bases.
class Subspace {
 public:
  Subspace(Index ambient_dim, ComplexMatrix basis, double tol);

  Index ambient_dim() const { return ambient_dim_; }
  Index count() const { return basis_.cols(); }
  double tol() const { return tol_; }
  const ComplexMatrix& basis() const { return basis_; }

 private:
  Index ambient_dim_;
  ComplexMatrix basis_;  // ambient_dim x count, orthonormal columns
  double tol_;
};

/// Kronecker product, left factor slow. Throws DimensionLimitError if either
/// dimension product exceeds max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   Index max_dim = kDefaultDimensionLimit);

/// Span of a set of equally-shaped operators, vectorized. Dimension of the
/// result is the numerical rank of the stacked vectorizations at `tol`.
Subspace span_of(const std::vector<ComplexMatrix>& operators,
                 const Tolerance& tol = Tolerance{});

/// Column space of a single matrix (for Hermitian PSD inputs this is its
/// support). Rank decided at `tol`.
Subspace column_space(const ComplexMatrix& m, const Tolerance& tol = Tolerance{});

/// True iff every basis vector of `small` has projection residual onto `big`
/// at most 10x the larger of the two recorded tolerances.
bool subspace_contains(const Subspace& big, const Subspace& small);

/// Orthogonal projector onto the subspace.
ComplexMatrix projector_onto(const Subspace& s);

/// Distance from the origin to the numerical range of a unitary matrix,
/// i.e. to the convex hull of its eigenvalues. Returns 0 exactly when the
/// origin lies in the hull.
double nu_distance(const ComplexMatrix& u, double unitary_tol = 1e-8);

/// Max-norm unitarity defect ||U^dag U - I||_max.
double unitarity_defect(const ComplexMatrix& u);

/// Column-major vectorization.
ComplexVector vectorize(const ComplexMatrix& m);

}  // namespace certichan
