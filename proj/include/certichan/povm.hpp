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

#include <string>
#include <vector>

#include "certichan/certify.hpp"
#include "certichan/channels.hpp"
#include "certichan/types.hpp"

namespace certichan {

/// General quantum measurement: positive semidefinite effects summing to the
/// identity.
class Povm {
 public:
  Povm(Index dim, std::vector<ComplexMatrix> effects);

  Index dim() const { return dim_; }
  Index effect_count() const { return static_cast<Index>(effects_.size()); }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }

 private:
  Index dim_;
  std::vector<ComplexMatrix> effects_;
};

/// Bijection on {0, ..., size-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<Index> map);

  static Permutation identity(Index size);

  /// Parses one-based cycle notation, e.g. "(1 2)(3 4)" on `size` elements.
  /// Elements not mentioned are fixed.
  static Permutation parse_cycles(const std::string& text, Index size);

  Index size() const { return static_cast<Index>(map_.size()); }
  Index operator()(Index i) const { return map_[static_cast<size_t>(i)]; }
  bool is_identity() const;

 private:
  std::vector<Index> map_;
};

/// Number of fixed points of the permutation.
Index fixed_points(const Permutation& pi);

/// Symmetric informationally complete POVM: d^2 rank-one effects
/// (1/d)|phi_i><phi_i| with pairwise overlap |<phi_i|phi_j>|^2 = 1/(d+1).
class SicPovm {
 public:
  explicit SicPovm(std::vector<ComplexVector> fiducials);

  Index dim() const { return fiducials_.front().size(); }
  const std::vector<ComplexVector>& fiducials() const { return fiducials_; }

  Povm povm() const;

  /// POVM whose i-th effect is (1/d)|phi_pi(i)><phi_pi(i)|.
  Povm permuted(const Permutation& pi) const;

 private:
  std::vector<ComplexVector> fiducials_;
};

/// Built-in analytic SIC POVMs: the qubit tetrahedron (d = 2) and the
/// Weyl-Heisenberg orbit of the standard qutrit fiducial (d = 3).
SicPovm sic_povm(Index d);

/// Quantum-classical channel P(rho) = sum_i tr(M_i rho)|i><i|, with Kraus
/// operators read off the spectral decompositions of the effects.
QuantumChannel povm_to_channel(const Povm& p, const Tolerance& tol = Tolerance{});

/// True iff some index i has supp(M_i) not contained in supp(N_i); effects
/// are matched by list position.
bool can_certify_povm(const Povm& p0, const Povm& p1, const Tolerance& tol = Tolerance{});

/// Rank-one specialization: true iff some pair x_i, y_i is linearly
/// independent.
bool rank_one_certify(const std::vector<ComplexVector>& x_vectors,
                      const std::vector<ComplexVector>& y_vectors,
                      const Tolerance& tol = Tolerance{});

/// Single-shot bound (d + k)/(d^2 + d) on the false-positive probability when
/// certifying a SIC POVM against its permutation with k fixed points.
double sic_p1_bound(Index d, Index k);

/// Parallel bound ((d + k)/(d^2 + d))^n.
double sic_p1_parallel_bound(Index d, Index k, Index n);

/// Explicit n-copy certificate for a SIC POVM against its permutation:
/// maximally entangled input on d^n, block-diagonal accepting effect with
/// reference-side blocks transposed in the computational basis, and p1/p2
/// computed directly against the explicitly built output states.
CertificationCertificate sic_certificate(Index d, const Permutation& pi, Index n,
                                         const Tolerance& tol = Tolerance{});

}  // namespace certichan
