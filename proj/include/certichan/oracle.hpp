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

#include <cstdint>
#include <vector>

#include "certichan/certify.hpp"
#include "certichan/channels.hpp"
#include "certichan/types.hpp"

namespace certichan {

/// Which hypothesis the secretly chosen channel in a simulation realizes.
enum class TrueHypothesis { kNull, kAlternative };

/// Outcome tally of a Monte Carlo run of the certification protocol.
/// Reproducible bit-for-bit from (seed, trials).
struct SimulationReport {
  Index trials = 0;
  std::uint64_t seed = 0;
  double empirical_fp_rate = 0.0;
  double empirical_fn_rate = 0.0;
  double analytic_p1 = 0.0;
  double fp_std_error = 0.0;
};

/// Samples the binary measurement {Omega_0, 1 - Omega_0} on the true output
/// state trial by trial. Each trial draws its randomness from (seed,
/// trial_index), so results do not depend on execution order.
SimulationReport simulate_protocol(const QuantumChannel& true_channel,
                                   TrueHypothesis truth,
                                   const CertificationCertificate& cert, Index trials,
                                   std::uint64_t seed);

/// Upper bound on the single-shot p1 from sampling: minimum of the
/// certificate p1 over `samples` Haar-random full-Schmidt-rank inputs plus
/// the maximally entangled state. Monotone nonincreasing in `samples` for a
/// fixed seed because sample i depends only on (seed, i).
double brute_force_p1(const QuantumChannel& null_channel,
                      const std::vector<QuantumChannel>& alt_channels, Index samples,
                      std::uint64_t seed, const Tolerance& tol = Tolerance{});

/// Cross-checks the parallel certificate at n copies against the single-copy
/// structure: p1 at the maximally entangled n-copy input must equal the n-th
/// power of the single-copy p1 for one alternative (and never exceed it for
/// several), and output-support inclusion must propagate exactly as the
/// channel-level support test predicts.
bool verify_tensor_power(const QuantumChannel& null_channel,
                         const std::vector<QuantumChannel>& alt_channels, Index n,
                         const Tolerance& tol = Tolerance{});

/// Independent agreement check between the two support routes: the rank of
/// the Choi-style output state at the maximally entangled input (computed by
/// eigendecomposition) must equal the rank of the vectorized Kraus span.
bool choi_support_crosscheck(const QuantumChannel& c, const Tolerance& tol = Tolerance{});

}  // namespace certichan
