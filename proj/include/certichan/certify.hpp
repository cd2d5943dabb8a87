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

#include "certichan/channels.hpp"
#include "certichan/matrix_core.hpp"
#include "certichan/types.hpp"

namespace certichan {

/// A concrete certification strategy: prepare `input_state`, run the channel
/// once (or n_parallel times in parallel), measure {accepting_effect,
/// 1 - accepting_effect}. Accept decides in favor of the promised channel.
///
/// p2 is the false-negative probability of this strategy; construction
/// guarantees it vanishes (<= 1e-9). p1 is the false-positive probability.
class CertificationCertificate {
 public:
  CertificationCertificate(PureState input_state, ComplexMatrix accepting_effect,
                           double p1, double p2, Index n_parallel);

  const PureState& input_state() const { return input_state_; }
  const ComplexMatrix& accepting_effect() const { return accepting_effect_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  Index n_parallel() const { return n_parallel_; }

 private:
  PureState input_state_;
  ComplexMatrix accepting_effect_;
  double p1_;
  double p2_;
  Index n_parallel_;
};

/// Number of parallel queries sufficient to push the false-positive
/// probability below epsilon, n_epsilon = ceil(log eps / log p1).
struct QueryBound {
  double epsilon;
  double p1_single;
  Index n_epsilon;
};

/// True iff supp(null) is not contained in the joint support of the
/// alternatives — the exact feasibility condition for certification with
/// vanishing false-negative error in finitely many parallel queries.
bool can_certify(const QuantumChannel& null_channel,
                 const std::vector<QuantumChannel>& alt_channels,
                 const Tolerance& tol = Tolerance{});

/// Adaptive feasibility coincides with parallel feasibility, so this is the
/// same support test with a single alternative.
bool can_certify_adaptive(const QuantumChannel& null_channel,
                          const QuantumChannel& alt_channel,
                          const Tolerance& tol = Tolerance{});

/// Builds the zero-false-negative strategy for input `psi`: the accepting
/// effect is the projector onto the orthocomplement of the joint alternative
/// output support (optimal for fixed input, and never worse than a rank-one
/// effect drawn from that orthocomplement).
///
/// Requires can_certify and full Schmidt rank of psi across the
/// channel/reference cut.
CertificationCertificate build_certificate(const QuantumChannel& null_channel,
                                           const std::vector<QuantumChannel>& alt_channels,
                                           const PureState& psi,
                                           const Tolerance& tol = Tolerance{});

/// Certificate for the n-fold tensor powers with a global (possibly
/// entangled) input on the n-copy space.
CertificationCertificate build_parallel_certificate(
    const QuantumChannel& null_channel, const std::vector<QuantumChannel>& alt_channels,
    Index n, const PureState& psi_n, const Tolerance& tol = Tolerance{});

/// False-positive probability of the parallel certificate at n copies.
double p1_parallel(const QuantumChannel& null_channel,
                   const std::vector<QuantumChannel>& alt_channels, Index n,
                   const PureState& psi_n, const Tolerance& tol = Tolerance{});

/// p1_single = 0 is special-cased to one query; p1_single = 1 has no bound.
QueryBound query_bound(double p1_single, double epsilon);

/// Single-shot false-positive probability when certifying `c` against the
/// identity channel with input psi and effect 1 - |psi><psi|: the fidelity
/// <psi| (c (x) 1)(|psi><psi|) |psi>.
double certify_against_identity(const QuantumChannel& c, const PureState& psi,
                                const Tolerance& tol = Tolerance{});

/// Error probability of unambiguous discrimination of unitary channels in
/// terms of the certification false-positive probability.
double unambiguous_error_from_p1(double p1);

/// Randomized search for an input state with low p1: Haar samples plus a
/// coordinate refinement pass, seeded and deterministic. The maximally
/// entangled state is always among the candidates.
PureState find_low_p1_input(const QuantumChannel& null_channel,
                            const std::vector<QuantumChannel>& alt_channels,
                            const Tolerance& tol, std::uint64_t seed,
                            Index haar_samples = 200, Index refine_passes = 2);

}  // namespace certichan
