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

#include "certichan/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "certichan/random.hpp"

namespace certichan {

SimulationReport simulate_protocol(const QuantumChannel& true_channel,
                                   TrueHypothesis truth,
                                   const CertificationCertificate& cert, Index trials,
                                   std::uint64_t seed) {
  if (trials <= 0) {
    throw std::invalid_argument("simulate_protocol: trial count must be positive");
  }
  const PureState& psi = cert.input_state();
  if (psi.dim() % true_channel.in_dim() != 0) {
    throw std::invalid_argument("simulate_protocol: input state does not match channel");
  }
  const Index ref_dim = psi.dim() / true_channel.in_dim();
  const DensityMatrix rho = output_state(true_channel, psi, ref_dim);
  if (rho.dim() != cert.accepting_effect().rows()) {
    throw std::invalid_argument("simulate_protocol: effect does not match output space");
  }

  double p_accept = (cert.accepting_effect() * rho.matrix()).trace().real();
  if (p_accept < -1e-9 || p_accept > 1.0 + 1e-9) {
    throw NumericalIntegrityError("simulate_protocol: outcome probability " +
                                  std::to_string(p_accept) + " outside [0,1]");
  }
  // Orthogonality dust: an exact-zero Born probability may surface as ~1e-16.
  if (std::abs(p_accept) <= 1e-12) p_accept = 0.0;
  p_accept = std::clamp(p_accept, 0.0, 1.0);

  Index accepts = 0;
  for (Index t = 0; t < trials; ++t) {
    auto rng = substream(seed, static_cast<std::uint64_t>(t));
    if (uniform01(rng) < p_accept) ++accepts;
  }
  const Index rejects = trials - accepts;

  SimulationReport report;
  report.trials = trials;
  report.seed = seed;
  report.analytic_p1 = cert.p1();
  if (truth == TrueHypothesis::kNull) {
    // Rejecting while the promised channel was in place is the false positive.
    report.empirical_fp_rate = static_cast<double>(rejects) / static_cast<double>(trials);
    report.fp_std_error = std::sqrt(report.empirical_fp_rate *
                                    (1.0 - report.empirical_fp_rate) /
                                    static_cast<double>(trials));
  } else {
    report.empirical_fn_rate = static_cast<double>(accepts) / static_cast<double>(trials);
  }
  return report;
}

double brute_force_p1(const QuantumChannel& null_channel,
                      const std::vector<QuantumChannel>& alt_channels, Index samples,
                      std::uint64_t seed, const Tolerance& tol) {
  const Index d = null_channel.in_dim();
  double best =
      build_certificate(null_channel, alt_channels, max_entangled(d), tol).p1();
  for (Index s = 0; s < samples; ++s) {
    auto rng = substream(seed, static_cast<std::uint64_t>(s));
    PureState psi = haar_state(d * d, rng);
    while (schmidt_rank(psi, d, tol) != d) {
      psi = haar_state(d * d, rng);
    }
    best = std::min(best, build_certificate(null_channel, alt_channels, psi, tol).p1());
  }
  return best;
}

namespace {

Subspace state_support(const DensityMatrix& rho, const Tolerance& tol) {
  return column_space(rho.matrix(), tol);
}

}  // namespace

bool verify_tensor_power(const QuantumChannel& null_channel,
                         const std::vector<QuantumChannel>& alt_channels, Index n,
                         const Tolerance& tol) {
  if (n <= 0 || alt_channels.empty()) {
    throw std::invalid_argument("verify_tensor_power: need n >= 1 and an alternative");
  }
  const Index d = null_channel.in_dim();
  Index d_n = 1;
  for (Index i = 0; i < n; ++i) {
    d_n *= d;
    if (d_n * d_n > kDefaultDimensionLimit) {
      throw DimensionLimitError("verify_tensor_power: space exceeds dimension limit");
    }
  }
  const PureState psi_n = max_entangled(d_n);
  const QuantumChannel null_n = tensor_power(null_channel, n);
  std::vector<QuantumChannel> alts_n;
  for (const auto& alt : alt_channels) alts_n.push_back(tensor_power(alt, n));

  // Output supports via eigendecomposition, independent of the Kraus-vector
  // route used inside build_certificate.
  const DensityMatrix sigma0 = output_state(null_n, psi_n, d_n);
  std::vector<ComplexMatrix> alt_bases;
  for (const auto& alt : alts_n) {
    const Subspace s = state_support(output_state(alt, psi_n, d_n), tol);
    alt_bases.push_back(s.basis());
  }
  std::vector<ComplexMatrix> alt_columns;
  for (const auto& b : alt_bases) {
    for (Index c = 0; c < b.cols(); ++c) alt_columns.push_back(b.col(c));
  }
  const Subspace joint_alt_out = span_of(alt_columns, tol);
  const Subspace null_out = state_support(sigma0, tol);

  const bool channel_certifiable = can_certify(null_channel, alt_channels, tol);
  const bool output_included = subspace_contains(joint_alt_out, null_out);

  // Inclusion must propagate: channel-level containment forces output
  // containment at every n, and channel-level escape forces output escape at
  // full-Schmidt-rank inputs.
  if (channel_certifiable == output_included) return false;
  if (!channel_certifiable) return true;

  const double p1_1 =
      build_certificate(null_channel, alt_channels, max_entangled(d), tol).p1();
  const double p1_n = p1_parallel(null_channel, alt_channels, n, psi_n, tol);
  const double product = std::pow(p1_1, static_cast<double>(n));
  if (alt_channels.size() == 1) {
    return std::abs(p1_n - product) <= 1e-8;
  }
  return p1_n <= product + 1e-8;
}

bool choi_support_crosscheck(const QuantumChannel& c, const Tolerance& tol) {
  const PureState psi = max_entangled(c.in_dim());
  const DensityMatrix rho = output_state(c, psi, c.in_dim());
  const Index state_rank = state_support(rho, tol).count();
  const Index kraus_rank = support(c, tol).count();
  return state_rank == kraus_rank;
}

}  // namespace certichan
