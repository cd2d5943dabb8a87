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
#include <random>
#include <vector>

#include "certichan/channels.hpp"
#include "certichan/types.hpp"

namespace certichan {

// All randomness is drawn from mt19937_64 (whose output sequence the standard
// pins down) through the helpers below, so results are reproducible
// bit-for-bit from a seed on any platform. std::uniform_real_distribution and
// friends are deliberately avoided: their sequences are
// implementation-defined.

/// SplitMix64 mix step; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Generator for substream `index` of the run seeded with `seed`. Streams are
/// independent of how many other substreams exist, which makes per-trial and
/// per-sample results schedule- and budget-independent.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) built from the top 53 bits of the generator.
double uniform01(std::mt19937_64& rng);

/// Standard normal via Box-Muller on uniform01 draws.
double standard_normal(std::mt19937_64& rng);

/// Complex standard Gaussian matrix (Ginibre ensemble).
ComplexMatrix ginibre(Index rows, Index cols, std::mt19937_64& rng);

/// Haar-random pure state of the given dimension.
PureState haar_state(Index dim, std::mt19937_64& rng);

/// Haar-random unitary via QR of a Ginibre matrix with the standard phase fix.
ComplexMatrix haar_unitary(Index dim, std::mt19937_64& rng);

/// Random channel from a Haar-random isometry sliced into `kraus_rank`
/// operators of shape out_dim x in_dim. Requires kraus_rank*out_dim >= in_dim.
QuantumChannel random_channel(Index in_dim, Index out_dim, Index kraus_rank,
                              std::mt19937_64& rng);

/// Random POVM with `effect_count` full-rank effects, built by normalizing
/// random PSD operators: M_i = S^{-1/2} A_i S^{-1/2} with S = sum A_i.
std::vector<ComplexMatrix> random_povm_effects(Index dim, Index effect_count,
                                               std::mt19937_64& rng);

/// Random rank-one POVM from the rows of a Haar-random isometry
/// C^dim -> C^effect_count. Requires effect_count >= dim.
std::vector<ComplexMatrix> random_rank_one_povm_effects(Index dim, Index effect_count,
                                                        std::mt19937_64& rng);

}  // namespace certichan
