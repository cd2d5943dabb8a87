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

#include "certichan/povm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

namespace certichan {

Povm::Povm(Index dim, std::vector<ComplexMatrix> effects)
    : dim_(dim), effects_(std::move(effects)) {
  if (dim_ <= 0) {
    throw std::invalid_argument("Povm: dimension must be positive");
  }
  if (effects_.empty()) {
    throw std::invalid_argument("Povm: effect list must be nonempty");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
  for (const auto& m : effects_) {
    if (m.rows() != dim_ || m.cols() != dim_) {
      throw std::invalid_argument("Povm: effects must be dim x dim");
    }
    require_finite(m, "Povm");
    if (max_abs(m - m.adjoint()) > 1e-9) {
      throw std::invalid_argument("Povm: effects must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9) {
      throw std::invalid_argument("Povm: effects must be positive semidefinite");
    }
    sum += m;
  }
  sum -= ComplexMatrix::Identity(dim_, dim_);
  if (max_abs(sum) > 1e-9) {
    throw std::invalid_argument("Povm: effects must sum to the identity");
  }
}

Permutation::Permutation(std::vector<Index> map) : map_(std::move(map)) {
  if (map_.empty()) {
    throw std::invalid_argument("Permutation: size must be positive");
  }
  std::vector<bool> seen(map_.size(), false);
  for (Index image : map_) {
    if (image < 0 || image >= static_cast<Index>(map_.size()) ||
        seen[static_cast<size_t>(image)]) {
      throw std::invalid_argument("Permutation: map is not a bijection");
    }
    seen[static_cast<size_t>(image)] = true;
  }
}

Permutation Permutation::identity(Index size) {
  std::vector<Index> map(static_cast<size_t>(size));
  for (Index i = 0; i < size; ++i) map[static_cast<size_t>(i)] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::parse_cycles(const std::string& text, Index size) {
  std::vector<Index> map(static_cast<size_t>(size));
  for (Index i = 0; i < size; ++i) map[static_cast<size_t>(i)] = i;
  std::vector<bool> mentioned(static_cast<size_t>(size), false);

  size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_spaces();
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw std::invalid_argument("Permutation: expected '(' in cycle notation: " + text);
    }
    ++pos;
    std::vector<Index> cycle;
    skip_spaces();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("Permutation: expected element index in: " + text);
      }
      Index value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > size) {
        throw std::invalid_argument("Permutation: element " + std::to_string(value) +
                                    " out of range 1.." + std::to_string(size));
      }
      if (mentioned[static_cast<size_t>(value - 1)]) {
        throw std::invalid_argument("Permutation: element " + std::to_string(value) +
                                    " appears twice; cycles must be disjoint");
      }
      mentioned[static_cast<size_t>(value - 1)] = true;
      cycle.push_back(value - 1);
      skip_spaces();
      if (pos < text.size() && (text[pos] == ',')) {
        ++pos;
        skip_spaces();
      }
    }
    if (pos >= text.size()) {
      throw std::invalid_argument("Permutation: unterminated cycle in: " + text);
    }
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i) {
      const Index from = cycle[i];
      const Index to = cycle[(i + 1) % cycle.size()];
      map[static_cast<size_t>(from)] = to;
    }
    skip_spaces();
  }
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (Index i = 0; i < size(); ++i) {
    if (map_[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

Index fixed_points(const Permutation& pi) {
  Index k = 0;
  for (Index i = 0; i < pi.size(); ++i) {
    if (pi(i) == i) ++k;
  }
  return k;
}

SicPovm::SicPovm(std::vector<ComplexVector> fiducials) : fiducials_(std::move(fiducials)) {
  if (fiducials_.empty()) {
    throw std::invalid_argument("SicPovm: fiducial list must be nonempty");
  }
  const Index d = fiducials_.front().size();
  if (static_cast<Index>(fiducials_.size()) != d * d) {
    throw std::invalid_argument("SicPovm: need d^2 fiducial vectors");
  }
  const double target = 1.0 / static_cast<double>(d + 1);
  for (size_t i = 0; i < fiducials_.size(); ++i) {
    if (fiducials_[i].size() != d) {
      throw std::invalid_argument("SicPovm: fiducials must share one dimension");
    }
    if (std::abs(fiducials_[i].norm() - 1.0) > 1e-9) {
      throw std::invalid_argument("SicPovm: fiducials must be unit vectors");
    }
    for (size_t j = i + 1; j < fiducials_.size(); ++j) {
      const double overlap = std::norm(fiducials_[i].dot(fiducials_[j]));
      if (std::abs(overlap - target) > 1e-9) {
        throw std::invalid_argument("SicPovm: pairwise overlap violates the SIC condition");
      }
    }
  }
  // Summing to the identity is implied for exact SICs but checked here so a
  // bad fiducial set cannot slip through as a non-measurement.
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& f : fiducials_) {
    sum += (f * f.adjoint()) / static_cast<double>(d);
  }
  if (max_abs(sum - ComplexMatrix::Identity(d, d)) > 1e-9) {
    throw std::invalid_argument("SicPovm: effects do not sum to the identity");
  }
}

Povm SicPovm::povm() const { return permuted(Permutation::identity(dim() * dim())); }

Povm SicPovm::permuted(const Permutation& pi) const {
  const Index d = dim();
  if (pi.size() != d * d) {
    throw std::invalid_argument("SicPovm: permutation size must equal d^2");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(fiducials_.size());
  for (Index i = 0; i < d * d; ++i) {
    const ComplexVector& f = fiducials_[static_cast<size_t>(pi(i))];
    effects.push_back((f * f.adjoint()) / static_cast<double>(d));
  }
  return Povm(d, std::move(effects));
}

SicPovm sic_povm(Index d) {
  using std::numbers::pi;
  if (d == 2) {
    // Bloch tetrahedron.
    std::vector<ComplexVector> fiducials;
    ComplexVector f0(2);
    f0 << 1.0, 0.0;
    fiducials.push_back(f0);
    const double a = 1.0 / std::sqrt(3.0);
    const double b = std::sqrt(2.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
      ComplexVector f(2);
      f << a, b * std::exp(Complex(0.0, 2.0 * pi * k / 3.0));
      fiducials.push_back(f);
    }
    return SicPovm(std::move(fiducials));
  }
  if (d == 3) {
    // Weyl-Heisenberg orbit of the qutrit fiducial (0, 1, -1)/sqrt(2).
    ComplexVector fiducial(3);
    fiducial << 0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    const Complex omega = std::exp(Complex(0.0, 2.0 * pi / 3.0));
    std::vector<ComplexVector> fiducials;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        ComplexVector f(3);
        for (int j = 0; j < 3; ++j) {
          // (X^a Z^b psi)_j = omega^{b (j - a)} psi_{j - a mod 3}
          const int src = ((j - a) % 3 + 3) % 3;
          f(j) = std::pow(omega, b * src) * fiducial(src);
        }
        fiducials.push_back(f);
      }
    }
    return SicPovm(std::move(fiducials));
  }
  throw std::invalid_argument("sic_povm: built-in fiducials exist only for d = 2 and d = 3");
}

QuantumChannel povm_to_channel(const Povm& p, const Tolerance& tol) {
  std::vector<ComplexMatrix> kraus;
  const Index m = p.effect_count();
  for (Index i = 0; i < m; ++i) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(p.effects()[static_cast<size_t>(i)]);
    for (Index k = 0; k < p.dim(); ++k) {
      const double alpha = es.eigenvalues()(k);
      if (alpha <= tol.abs_floor) continue;
      ComplexMatrix op = ComplexMatrix::Zero(m, p.dim());
      op.row(i) = std::sqrt(alpha) * es.eigenvectors().col(k).adjoint();
      kraus.push_back(std::move(op));
    }
  }
  return QuantumChannel(std::move(kraus));
}

bool can_certify_povm(const Povm& p0, const Povm& p1, const Tolerance& tol) {
  if (p0.dim() != p1.dim() || p0.effect_count() != p1.effect_count()) {
    throw std::invalid_argument("can_certify_povm: POVMs must share dimension and "
                                "effect count (effects are matched by index)");
  }
  for (Index i = 0; i < p0.effect_count(); ++i) {
    const Subspace supp_m = column_space(p0.effects()[static_cast<size_t>(i)], tol);
    const Subspace supp_n = column_space(p1.effects()[static_cast<size_t>(i)], tol);
    if (!subspace_contains(supp_n, supp_m)) return true;
  }
  return false;
}

bool rank_one_certify(const std::vector<ComplexVector>& x_vectors,
                      const std::vector<ComplexVector>& y_vectors, const Tolerance& tol) {
  if (x_vectors.size() != y_vectors.size()) {
    throw std::invalid_argument("rank_one_certify: vector lists must have equal length");
  }
  for (size_t i = 0; i < x_vectors.size(); ++i) {
    if (x_vectors[i].size() != y_vectors[i].size()) {
      throw std::invalid_argument("rank_one_certify: paired vectors must share dimension");
    }
    const double overlap =
        std::abs(x_vectors[i].dot(y_vectors[i])) /
        (x_vectors[i].norm() * y_vectors[i].norm());
    if (overlap < 1.0 - 10.0 * tol.rel_rank_cut) return true;
  }
  return false;
}

double sic_p1_bound(Index d, Index k) {
  if (d <= 0 || k < 0 || k > d * d) {
    throw std::invalid_argument("sic_p1_bound: need 0 <= k <= d^2");
  }
  return static_cast<double>(d + k) / static_cast<double>(d * d + d);
}

double sic_p1_parallel_bound(Index d, Index k, Index n) {
  if (n <= 0) {
    throw std::invalid_argument("sic_p1_parallel_bound: n must be positive");
  }
  return std::pow(sic_p1_bound(d, k), static_cast<double>(n));
}

namespace {

// Enumerates label tuples (i_1, ..., i_n) over [count]^n in row-major order,
// matching the Kronecker ordering used everywhere else.
bool next_tuple(std::vector<Index>& tuple, Index count) {
  for (size_t pos = tuple.size(); pos-- > 0;) {
    if (++tuple[pos] < count) return true;
    tuple[pos] = 0;
  }
  return false;
}

}  // namespace

CertificationCertificate sic_certificate(Index d, const Permutation& pi, Index n,
                                         const Tolerance& tol) {
  if (n <= 0) {
    throw std::invalid_argument("sic_certificate: n must be positive");
  }
  const SicPovm sic = sic_povm(d);
  if (pi.size() != d * d) {
    throw std::invalid_argument("sic_certificate: permutation must act on d^2 elements");
  }
  const Index label_count = d * d;
  Index label_dim = 1, ref_dim = 1;
  for (Index copy = 0; copy < n; ++copy) {
    label_dim *= label_count;
    ref_dim *= d;
    if (label_dim * ref_dim > kDefaultDimensionLimit) {
      throw DimensionLimitError("sic_certificate: output space exceeds dimension limit");
    }
  }

  const PureState psi = max_entangled(ref_dim);
  const QuantumChannel p0_n = tensor_power(povm_to_channel(sic.povm(), tol), n);
  const QuantumChannel p1_n = tensor_power(povm_to_channel(sic.permuted(pi), tol), n);
  const DensityMatrix sigma0 = output_state(p0_n, psi, ref_dim);
  const DensityMatrix sigma1 = output_state(p1_n, psi, ref_dim);

  // Omega_0 = sum over label tuples of |i><i| (x) (1 - |phi_pi(i)><phi_pi(i)|)^T.
  ComplexMatrix effect = ComplexMatrix::Zero(label_dim * ref_dim, label_dim * ref_dim);
  std::vector<Index> tuple(static_cast<size_t>(n), 0);
  Index label = 0;
  do {
    ComplexVector w = ComplexVector::Ones(1);
    for (Index pos = 0; pos < n; ++pos) {
      const ComplexVector& phi = sic.fiducials()[static_cast<size_t>(pi(tuple[static_cast<size_t>(pos)]))];
      ComplexVector grown(w.size() * d);
      for (Index a = 0; a < w.size(); ++a) {
        grown.segment(a * d, d) = w(a) * phi.conjugate();
      }
      w = std::move(grown);
    }
    effect.block(label * ref_dim, label * ref_dim, ref_dim, ref_dim) =
        ComplexMatrix::Identity(ref_dim, ref_dim) - w * w.adjoint();
    ++label;
  } while (next_tuple(tuple, label_count));

  double p1 = 1.0 - (effect * sigma0.matrix()).trace().real();
  p1 = std::clamp(p1, 0.0, 1.0);
  double p2 = std::max((effect * sigma1.matrix()).trace().real(), 0.0);
  return CertificationCertificate(psi, std::move(effect), p1, p2, n);
}

}  // namespace certichan
