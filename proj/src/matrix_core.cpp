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

#include "certichan/matrix_core.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace certichan {

namespace {

// Rotates each column so its largest-magnitude entry is real positive.
// First index attaining the maximum wins, which keeps the convention
// deterministic for fixed input.
void fix_column_phases(ComplexMatrix& basis) {
  for (Index c = 0; c < basis.cols(); ++c) {
    Index arg_max = 0;
    double best = -1.0;
    for (Index r = 0; r < basis.rows(); ++r) {
      const double mag = std::abs(basis(r, c));
      if (mag > best) {
        best = mag;
        arg_max = r;
      }
    }
    if (best > 0.0) {
      const Complex z = basis(arg_max, c);
      basis.col(c) *= std::conj(z) / std::abs(z);
    }
  }
}

Subspace subspace_from_svd(const ComplexMatrix& stacked, const Tolerance& tol) {
  const Index ambient = stacked.rows();
  if (stacked.cols() == 0) {
    return Subspace(ambient, ComplexMatrix(ambient, 0), tol.abs_floor);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(stacked, Eigen::ComputeThinU);
  const auto& sigma = svd.singularValues();
  const double cut = tol.cut_for(sigma.size() > 0 ? sigma(0) : 0.0);
  Index rank = 0;
  while (rank < sigma.size() && sigma(rank) > cut) ++rank;
  ComplexMatrix basis = svd.matrixU().leftCols(rank);
  fix_column_phases(basis);
  return Subspace(ambient, std::move(basis), cut);
}

}  // namespace

Subspace::Subspace(Index ambient_dim, ComplexMatrix basis, double tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)), tol_(tol) {
  if (ambient_dim_ <= 0) {
    throw std::invalid_argument("Subspace: ambient dimension must be positive");
  }
  if (basis_.rows() != ambient_dim_ || basis_.cols() > ambient_dim_) {
    throw std::invalid_argument("Subspace: basis shape inconsistent with ambient dimension");
  }
  if (tol_ < 0.0) {
    throw std::invalid_argument("Subspace: tolerance must be nonnegative");
  }
  if (basis_.cols() > 0) {
    ComplexMatrix gram = basis_.adjoint() * basis_;
    gram -= ComplexMatrix::Identity(basis_.cols(), basis_.cols());
    if (max_abs(gram) > 10.0 * std::max(tol_, 1e-12)) {
      throw std::invalid_argument("Subspace: basis is not orthonormal");
    }
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, Index max_dim) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  if (a.rows() > 0 && b.rows() > 0 && (rows > max_dim || cols > max_dim)) {
    throw DimensionLimitError("kron: result dimension " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " exceeds limit " +
                              std::to_string(max_dim));
  }
  ComplexMatrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

Subspace span_of(const std::vector<ComplexMatrix>& operators, const Tolerance& tol) {
  if (operators.empty()) {
    throw std::invalid_argument("span_of: operator list must be nonempty");
  }
  const Index rows = operators.front().rows();
  const Index cols = operators.front().cols();
  ComplexMatrix stacked(rows * cols, static_cast<Index>(operators.size()));
  for (size_t k = 0; k < operators.size(); ++k) {
    if (operators[k].rows() != rows || operators[k].cols() != cols) {
      throw std::invalid_argument("span_of: operators must share one shape");
    }
    require_finite(operators[k], "span_of");
    stacked.col(static_cast<Index>(k)) = vectorize(operators[k]);
  }
  return subspace_from_svd(stacked, tol);
}

Subspace column_space(const ComplexMatrix& m, const Tolerance& tol) {
  require_finite(m, "column_space");
  return subspace_from_svd(m, tol);
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim() != small.ambient_dim()) {
    throw std::invalid_argument("subspace_contains: ambient dimensions differ");
  }
  const double threshold = 10.0 * std::max(big.tol(), small.tol());
  for (Index c = 0; c < small.count(); ++c) {
    const ComplexVector v = small.basis().col(c);
    const ComplexVector residual = v - big.basis() * (big.basis().adjoint() * v);
    if (residual.norm() > threshold) return false;
  }
  return true;
}

ComplexMatrix projector_onto(const Subspace& s) {
  if (s.count() == 0) {
    return ComplexMatrix::Zero(s.ambient_dim(), s.ambient_dim());
  }
  return s.basis() * s.basis().adjoint();
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  ComplexMatrix defect = u.adjoint() * u;
  defect -= ComplexMatrix::Identity(u.rows(), u.cols());
  return max_abs(defect);
}

namespace {

// Distance from the origin to the segment [a, b] in the complex plane.
double origin_segment_distance(Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 < 1e-30) return std::abs(a);
  double t = -std::real(std::conj(a) * d) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * d);
}

}  // namespace

double nu_distance(const ComplexMatrix& u, double unitary_tol) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw std::invalid_argument("nu_distance: input must be square and nonempty");
  }
  if (unitarity_defect(u) > unitary_tol) {
    throw std::invalid_argument("nu_distance: input is not unitary within tolerance");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalIntegrityError("nu_distance: eigenvalue computation failed");
  }
  const ComplexVector eig = solver.eigenvalues();

  // Eigenvalues of a unitary lie on the unit circle; the origin is inside
  // their convex hull exactly when no open half-plane through the origin
  // contains all of them, i.e. when the largest angular gap is below pi.
  std::vector<double> phases(static_cast<size_t>(eig.size()));
  for (Index i = 0; i < eig.size(); ++i) phases[static_cast<size_t>(i)] = std::arg(eig(i));
  std::sort(phases.begin(), phases.end());
  double max_gap = 2.0 * std::numbers::pi - (phases.back() - phases.front());
  for (size_t i = 1; i < phases.size(); ++i) {
    max_gap = std::max(max_gap, phases[i] - phases[i - 1]);
  }
  if (max_gap < std::numbers::pi - 1e-12) {
    return 0.0;  // hull surrounds the origin
  }

  // All eigenvalues lie in a closed half-plane: the closest hull point sits
  // on a segment between two eigenvalues (or on a single one).
  double best = std::abs(eig(0));
  for (Index i = 0; i < eig.size(); ++i) {
    for (Index j = i; j < eig.size(); ++j) {
      best = std::min(best, origin_segment_distance(eig(i), eig(j)));
    }
  }
  return std::min(best, 1.0);
}

}  // namespace certichan
