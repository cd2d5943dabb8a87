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

#include "certichan/io.hpp"

#include <cmath>
#include <fstream>

namespace certichan {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(context + ": expected a nonempty array of rows");
  }
  const size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) {
    throw std::invalid_argument(context + ": row 0 must be a nonempty array");
  }
  const size_t cols = j[0].size();
  ComplexMatrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw std::invalid_argument(context + ": row " + std::to_string(i) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(cols));
    }
    for (size_t c = 0; c < cols; ++c) {
      const auto& entry = row[c];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw std::invalid_argument(context + ": entry (" + std::to_string(i) + "," +
                                    std::to_string(c) + ") must be a [re, im] pair");
      }
      m(static_cast<Index>(i), static_cast<Index>(c)) =
          Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  require_finite(m, context);
  return m;
}

namespace {

std::vector<ComplexMatrix> matrices_from_json(const json& j, const std::string& context) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(context + ": expected a nonempty array of matrices");
  }
  std::vector<ComplexMatrix> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(matrix_from_json(j[i], context + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& require_field(const json& j, const std::string& key, const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw std::invalid_argument(context + ": missing field \"" + key + "\"");
  }
  return *it;
}

}  // namespace

ChannelSpec parse_channel_spec(const json& j, const std::string& context) {
  if (!j.is_object()) {
    throw std::invalid_argument(context + ": spec must be a JSON object");
  }
  const json& kind_field = require_field(j, "kind", context);
  if (!kind_field.is_string()) {
    throw std::invalid_argument(context + ": \"kind\" must be a string");
  }
  const std::string kind = kind_field.get<std::string>();

  if (kind == "kraus") {
    auto kraus = matrices_from_json(require_field(j, "kraus", context), context + ".kraus");
    return ChannelSpec{kind, QuantumChannel(std::move(kraus)), std::nullopt};
  }
  if (kind == "unitary") {
    const ComplexMatrix u =
        matrix_from_json(require_field(j, "matrix", context), context + ".matrix");
    return ChannelSpec{kind, unitary_channel(u), std::nullopt};
  }
  if (kind == "mixed_unitary") {
    const json& probs_field = require_field(j, "probs", context);
    if (!probs_field.is_array()) {
      throw std::invalid_argument(context + ".probs: expected an array of numbers");
    }
    std::vector<double> probs;
    for (const auto& p : probs_field) {
      if (!p.is_number()) {
        throw std::invalid_argument(context + ".probs: entries must be numbers");
      }
      probs.push_back(p.get<double>());
    }
    auto unitaries =
        matrices_from_json(require_field(j, "unitaries", context), context + ".unitaries");
    return ChannelSpec{kind, mixed_unitary_channel(probs, unitaries), std::nullopt};
  }
  if (kind == "povm") {
    auto effects =
        matrices_from_json(require_field(j, "effects", context), context + ".effects");
    const Index dim = effects.front().rows();
    Povm povm(dim, std::move(effects));
    QuantumChannel channel = povm_to_channel(povm);
    return ChannelSpec{kind, std::move(channel), std::move(povm)};
  }
  if (kind == "sic") {
    const json& d_field = require_field(j, "d", context);
    if (!d_field.is_number_integer()) {
      throw std::invalid_argument(context + ".d: expected an integer");
    }
    const Index d = d_field.get<Index>();
    const SicPovm sic = sic_povm(d);
    Permutation pi = Permutation::identity(d * d);
    if (j.contains("permutation")) {
      const json& perm_field = j.at("permutation");
      if (!perm_field.is_string()) {
        throw std::invalid_argument(context + ".permutation: expected a cycle string");
      }
      pi = Permutation::parse_cycles(perm_field.get<std::string>(), d * d);
    }
    Povm povm = sic.permuted(pi);
    QuantumChannel channel = povm_to_channel(povm);
    return ChannelSpec{kind, std::move(channel), std::move(povm)};
  }
  throw std::invalid_argument(context + ": unknown kind \"" + kind +
                              "\" (expected kraus, unitary, mixed_unitary, povm or sic)");
}

ChannelSpec load_channel_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument(path + ": cannot open file");
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return parse_channel_spec(j, path);
}

namespace {

void require_finite_number(const json& j, const std::string& key, const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number() || !std::isfinite(it->get<double>())) {
    throw std::invalid_argument(context + ": field \"" + key + "\" must be a finite number");
  }
}

void require_table(const json& j, const std::string& key, size_t arity,
                   const std::string& context) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_array()) {
    throw std::invalid_argument(context + ": field \"" + key + "\" must be an array");
  }
  for (const auto& row : *it) {
    if (!row.is_array() || row.size() != arity) {
      throw std::invalid_argument(context + ": rows of \"" + key + "\" must have " +
                                  std::to_string(arity) + " entries");
    }
    for (const auto& v : row) {
      if (!v.is_number() || !std::isfinite(v.get<double>())) {
        throw std::invalid_argument(context + ": table entries must be finite numbers");
      }
    }
  }
}

}  // namespace

void validate_report_json(const json& report) {
  const std::string context = "report";
  if (!report.is_object()) {
    throw std::invalid_argument(context + ": must be a JSON object");
  }
  const json& cmd = require_field(report, "command", context);
  if (!cmd.is_string()) {
    throw std::invalid_argument(context + ": \"command\" must be a string");
  }
  const std::string command = cmd.get<std::string>();
  const json& verdict = require_field(report, "verdict", context);
  if (!verdict.is_string() || (verdict.get<std::string>() != "certifiable" &&
                               verdict.get<std::string>() != "not-certifiable")) {
    throw std::invalid_argument(context + ": \"verdict\" must be certifiable/not-certifiable");
  }

  if (command == "check") {
    return;
  }
  if (command == "bound") {
    require_finite_number(report, "p1_single", context);
    require_finite_number(report, "epsilon", context);
    require_finite_number(report, "n_epsilon", context);
    require_table(report, "p1_parallel_table", 3, context);
    return;
  }
  if (command == "sic") {
    require_finite_number(report, "d", context);
    require_finite_number(report, "k", context);
    require_finite_number(report, "epsilon", context);
    if (verdict.get<std::string>() == "certifiable") {
      require_finite_number(report, "n_epsilon", context);
      require_table(report, "bound_table", 4, context);
    }
    return;
  }
  if (command == "simulate") {
    require_finite_number(report, "trials", context);
    require_finite_number(report, "seed", context);
    require_finite_number(report, "empirical_fp_rate", context);
    require_finite_number(report, "empirical_fn_rate", context);
    require_finite_number(report, "analytic_p1", context);
    require_finite_number(report, "fp_std_error", context);
    return;
  }
  throw std::invalid_argument(context + ": unknown command \"" + command + "\"");
}

}  // namespace certichan
