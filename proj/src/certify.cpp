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

#include "certichan/certify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "certichan/random.hpp"

namespace certichan {

namespace {

void require_same_shape(const QuantumChannel& null_channel,
                        const std::vector<QuantumChannel>& alt_channels) {
  if (alt_channels.empty()) {
    throw std::invalid_argument("certify: need at least one alternative channel");
  }
  for (const auto& alt : alt_channels) {
    if (alt.in_dim() != null_channel.in_dim() || alt.out_dim() != null_channel.out_dim()) {
      throw std::invalid_argument("certify: channels must share one shape");
    }
  }
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b).trace().real();
}

}  // namespace

CertificationCertificate::CertificationCertificate(PureState input_state,
                                                   ComplexMatrix accepting_effect,
                                                   double p1, double p2, Index n_parallel)
    : input_state_(std::move(input_state)),
      accepting_effect_(std::move(accepting_effect)),
      p1_(p1),
      p2_(p2),
      n_parallel_(n_parallel) {
  if (accepting_effect_.rows() != accepting_effect_.cols()) {
    throw std::invalid_argument("CertificationCertificate: effect must be square");
  }
  require_finite(accepting_effect_, "CertificationCertificate");
  if (max_abs(accepting_effect_ - accepting_effect_.adjoint()) > 1e-9) {
    throw std::invalid_argument("CertificationCertificate: effect must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(accepting_effect_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9 || es.eigenvalues().maxCoeff() > 1.0 + 1e-9) {
    throw std::invalid_argument("CertificationCertificate: effect eigenvalues must lie in [0,1]");
  }
  if (!(p2_ <= 1e-9)) {
    throw std::invalid_argument("CertificationCertificate: false-negative probability must vanish");
  }
  if (!(p1_ >= 0.0 && p1_ <= 1.0)) {
    throw std::invalid_argument("CertificationCertificate: p1 must lie in [0,1]");
  }
  if (n_parallel_ <= 0) {
    throw std::invalid_argument("CertificationCertificate: n_parallel must be positive");
  }
}

bool can_certify(const QuantumChannel& null_channel,
                 const std::vector<QuantumChannel>& alt_channels, const Tolerance& tol) {
  require_same_shape(null_channel, alt_channels);
  return !subspace_contains(joint_support(alt_channels, tol), support(null_channel, tol));
}

bool can_certify_adaptive(const QuantumChannel& null_channel,
                          const QuantumChannel& alt_channel, const Tolerance& tol) {
  return can_certify(null_channel, {alt_channel}, tol);
}

CertificationCertificate build_certificate(const QuantumChannel& null_channel,
                                           const std::vector<QuantumChannel>& alt_channels,
                                           const PureState& psi, const Tolerance& tol) {
  require_same_shape(null_channel, alt_channels);
  if (psi.dim() % null_channel.in_dim() != 0) {
    throw std::invalid_argument("build_certificate: input dimension must be a multiple of "
                                "the channel input dimension");
  }
  const Index ref_dim = psi.dim() / null_channel.in_dim();
  if (schmidt_rank(psi, null_channel.in_dim(), tol) != null_channel.in_dim()) {
    throw std::invalid_argument(
        "build_certificate: input state must have full Schmidt rank across the "
        "channel/reference cut");
  }
  if (!can_certify(null_channel, alt_channels, tol)) {
    throw NoCertificateError(
        "build_certificate: null support is contained in the joint alternative support; "
        "no zero-false-negative strategy exists");
  }

  // The joint alternative output support is spanned by (F (x) 1)|psi> over all
  // alternative Kraus operators F.
  std::vector<ComplexMatrix> alt_vectors;
  for (const auto& alt : alt_channels) {
    for (const auto& f : alt.kraus()) {
      alt_vectors.push_back(apply_left_factor(f, psi.amplitudes(), ref_dim));
    }
  }
  const Subspace alt_support = span_of(alt_vectors, tol);
  const ComplexMatrix p_alt = projector_onto(alt_support);
  const Index out_total = null_channel.out_dim() * ref_dim;
  ComplexMatrix effect = ComplexMatrix::Identity(out_total, out_total) - p_alt;

  const DensityMatrix rho0 = output_state(null_channel, psi, ref_dim);
  double p1 = real_trace_product(p_alt, rho0.matrix());
  p1 = std::clamp(p1, 0.0, 1.0);

  double p2 = 0.0;
  for (const auto& alt : alt_channels) {
    p2 += real_trace_product(effect, output_state(alt, psi, ref_dim).matrix());
  }
  p2 = std::max(p2, 0.0);

  return CertificationCertificate(psi, std::move(effect), p1, p2, /*n_parallel=*/1);
}

CertificationCertificate build_parallel_certificate(
    const QuantumChannel& null_channel, const std::vector<QuantumChannel>& alt_channels,
    Index n, const PureState& psi_n, const Tolerance& tol) {
  require_same_shape(null_channel, alt_channels);
  const QuantumChannel null_n = tensor_power(null_channel, n);
  std::vector<QuantumChannel> alts_n;
  alts_n.reserve(alt_channels.size());
  for (const auto& alt : alt_channels) {
    alts_n.push_back(tensor_power(alt, n));
  }
  const CertificationCertificate single = build_certificate(null_n, alts_n, psi_n, tol);
  return CertificationCertificate(single.input_state(), single.accepting_effect(),
                                  single.p1(), single.p2(), n);
}

double p1_parallel(const QuantumChannel& null_channel,
                   const std::vector<QuantumChannel>& alt_channels, Index n,
                   const PureState& psi_n, const Tolerance& tol) {
  return build_parallel_certificate(null_channel, alt_channels, n, psi_n, tol).p1();
}

QueryBound query_bound(double p1_single, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("query_bound: epsilon must lie in (0,1)");
  }
  if (p1_single < 0.0 || p1_single > 1.0) {
    throw std::invalid_argument("query_bound: p1 must lie in [0,1]");
  }
  if (p1_single == 1.0) {
    throw NoCertificateError("query_bound: p1 = 1 admits no finite query count");
  }
  if (p1_single == 0.0) {
    return QueryBound{epsilon, p1_single, 1};
  }
  // Ties at an exactly integer ratio resolve to the smaller count.
  const double ratio = std::log(epsilon) / std::log(p1_single);
  Index n = static_cast<Index>(std::max(1.0, std::ceil(ratio - 1e-9)));
  while (static_cast<double>(n) * std::log(p1_single) > std::log(epsilon) + 1e-12) {
    ++n;
  }
  return QueryBound{epsilon, p1_single, n};
}

double certify_against_identity(const QuantumChannel& c, const PureState& psi,
                                const Tolerance& tol) {
  if (c.in_dim() != c.out_dim()) {
    throw std::invalid_argument(
        "certify_against_identity: channel must preserve its input dimension");
  }
  if (!can_certify(c, {identity_channel(c.in_dim())}, tol)) {
    throw NoCertificateError(
        "certify_against_identity: the channel is the identity channel");
  }
  if (psi.dim() % c.in_dim() != 0) {
    throw std::invalid_argument("certify_against_identity: input dimension mismatch");
  }
  const Index ref_dim = psi.dim() / c.in_dim();
  const DensityMatrix rho0 = output_state(c, psi, ref_dim);
  const double p1 =
      (psi.amplitudes().adjoint() * rho0.matrix() * psi.amplitudes())(0, 0).real();
  return std::clamp(p1, 0.0, 1.0);
}

double unambiguous_error_from_p1(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) {
    throw std::invalid_argument("unambiguous_error_from_p1: p1 must lie in [0,1]");
  }
  return p1 * p1;
}

PureState find_low_p1_input(const QuantumChannel& null_channel,
                            const std::vector<QuantumChannel>& alt_channels,
                            const Tolerance& tol, std::uint64_t seed, Index haar_samples,
                            Index refine_passes) {
  const Index dim = null_channel.in_dim() * null_channel.in_dim();
  PureState best = max_entangled(null_channel.in_dim());
  double best_p1 = build_certificate(null_channel, alt_channels, best, tol).p1();

  auto consider = [&](const PureState& candidate) {
    if (schmidt_rank(candidate, null_channel.in_dim(), tol) != null_channel.in_dim()) {
      return;
    }
    const double p1 = build_certificate(null_channel, alt_channels, candidate, tol).p1();
    if (p1 < best_p1) {
      best_p1 = p1;
      best = candidate;
    }
  };

  for (Index s = 0; s < haar_samples; ++s) {
    auto rng = substream(seed, static_cast<std::uint64_t>(s));
    consider(haar_state(dim, rng));
  }

  // Coordinate refinement: nudge one amplitude at a time along the four
  // axis directions with a shrinking step, keeping improvements.
  double step = 0.25;
  for (Index pass = 0; pass < refine_passes; ++pass) {
    for (Index coord = 0; coord < dim; ++coord) {
      for (const Complex delta : {Complex(step, 0.0), Complex(-step, 0.0),
                                  Complex(0.0, step), Complex(0.0, -step)}) {
        ComplexVector moved = best.amplitudes();
        moved(coord) += delta;
        if (moved.norm() < 1e-9) continue;
        moved /= moved.norm();
        consider(PureState(std::move(moved)));
      }
    }
    step *= 0.5;
  }
  return best;
}

}  // namespace certichan
