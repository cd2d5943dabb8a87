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

#include <optional>
#include <string>

#include <json.hpp>

#include "certichan/channels.hpp"
#include "certichan/povm.hpp"
#include "certichan/types.hpp"

namespace certichan {

/// A channel description loaded from disk. POVM-backed kinds keep the
/// measurement alongside its quantum-classical channel embedding.
struct ChannelSpec {
  std::string kind;  // "kraus" | "unitary" | "mixed_unitary" | "povm" | "sic"
  QuantumChannel channel;
  std::optional<Povm> povm;
};

/// Complex matrices are stored as rows of [re, im] pairs.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& context);

ChannelSpec parse_channel_spec(const nlohmann::json& j, const std::string& context);

/// Loads and validates a spec file; diagnostics name the file and field.
ChannelSpec load_channel_spec(const std::string& path);

/// Validates the machine-readable report schema; throws invalid_argument
/// with a field diagnostic on the first violation.
void validate_report_json(const nlohmann::json& report);

}  // namespace certichan
