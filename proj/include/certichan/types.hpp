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

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

namespace certichan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

using Index = Eigen::Index;

// Hard cap on any Hilbert-space dimension produced by tensor operations.
inline constexpr Index kDefaultDimensionLimit = Index{1} << 20;

/// Requested operation would produce a space larger than the configured cap.
class DimensionLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Certification is impossible for the given channels (support inclusion holds).
class NoCertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed probability or matrix violated its numerical sanity bounds.
class NumericalIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thresholds for numerical rank decisions.
///
/// Singular values below rel_rank_cut times the largest singular value are
/// treated as zero; abs_floor kills everything below it even when the largest
/// singular value is itself tiny.
struct Tolerance {
  double rel_rank_cut = 1e-10;
  double abs_floor = 1e-12;

  Tolerance() = default;
  Tolerance(double rel, double abs) : rel_rank_cut(rel), abs_floor(abs) {
    if (!(rel > 0.0 && rel < 1.0) || !(abs > 0.0 && abs < 1.0)) {
      throw std::invalid_argument("Tolerance: cuts must lie in (0, 1)");
    }
  }

  /// Absolute singular-value threshold for a spectrum with the given maximum.
  double cut_for(double sigma_max) const {
    return std::max(rel_rank_cut * sigma_max, abs_floor);
  }
};

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

inline void require_finite(const ComplexMatrix& m, const std::string& what) {
  if (!all_finite(m)) {
    throw std::invalid_argument(what + ": entries must be finite");
  }
}

}  // namespace certichan
