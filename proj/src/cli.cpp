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

#include "certichan/cli.hpp"

#include <CLI11.hpp>
#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>

#include "certichan/certify.hpp"
#include "certichan/io.hpp"
#include "certichan/oracle.hpp"
#include "certichan/povm.hpp"
#include "certichan/random.hpp"

namespace certichan {

namespace {

using nlohmann::json;

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

struct CommonOptions {
  double tol_rel = Tolerance{}.rel_rank_cut;
  bool quiet = false;
  std::string out_path;
  std::string csv_path;
};

void add_common(CLI::App* cmd, CommonOptions* common) {
  cmd->add_option("--tol", common->tol_rel, "Relative numerical-rank cut")
      ->check(CLI::Range(1e-15, 0.5));
  cmd->add_flag("--quiet", common->quiet, "Suppress report text; verdict via exit code");
  cmd->add_option("--out", common->out_path, "Write the machine-readable JSON report here");
  cmd->add_option("--csv", common->csv_path, "Write the (N, p1, bound) table as CSV");
}

void emit(const CommonOptions& common, const json& report, const std::string& text,
          std::ostream& out) {
  if (!common.quiet) {
    out << text;
  }
  if (!common.out_path.empty()) {
    validate_report_json(report);
    std::ofstream f(common.out_path);
    if (!f) {
      throw std::invalid_argument(common.out_path + ": cannot open for writing");
    }
    f << report.dump(2) << "\n";
  }
}

void write_csv(const std::string& path, const std::vector<std::array<double, 3>>& rows) {
  std::ofstream f(path);
  if (!f) {
    throw std::invalid_argument(path + ": cannot open for writing");
  }
  f << "N,p1,bound\n";
  for (const auto& row : rows) {
    f << static_cast<long long>(row[0]) << "," << fmt(row[1]) << "," << fmt(row[2]) << "\n";
  }
}

std::vector<QuantumChannel> load_alternatives(const std::vector<std::string>& paths) {
  std::vector<QuantumChannel> alts;
  alts.reserve(paths.size());
  for (const auto& p : paths) {
    alts.push_back(load_channel_spec(p).channel);
  }
  return alts;
}

Index sample_budget(Index in_dim) {
  if (in_dim <= 2) return 10000;
  if (in_dim == 3) return 1000;
  return 200;
}

int cmd_check(const std::string& null_path, const std::vector<std::string>& alt_paths,
              const CommonOptions& common, std::ostream& out) {
  const Tolerance tol(common.tol_rel, Tolerance{}.abs_floor);
  const QuantumChannel null_channel = load_channel_spec(null_path).channel;
  const std::vector<QuantumChannel> alts = load_alternatives(alt_paths);
  const bool certifiable = can_certify(null_channel, alts, tol);

  json report;
  report["command"] = "check";
  report["verdict"] = certifiable ? "certifiable" : "not-certifiable";
  std::string text = std::string("verdict: ") + (certifiable ? "certifiable" : "not-certifiable") +
                     "\n";
  emit(common, report, text, out);
  return certifiable ? kExitCertifiable : kExitNotCertifiable;
}

int cmd_bound(const std::string& null_path, const std::vector<std::string>& alt_paths,
              double epsilon, Index max_n, std::uint64_t seed, const CommonOptions& common,
              std::ostream& out) {
  const Tolerance tol(common.tol_rel, Tolerance{}.abs_floor);
  const QuantumChannel null_channel = load_channel_spec(null_path).channel;
  const std::vector<QuantumChannel> alts = load_alternatives(alt_paths);

  if (!can_certify(null_channel, alts, tol)) {
    json report;
    report["command"] = "bound";
    report["verdict"] = "not-certifiable";
    report["epsilon"] = epsilon;
    report["p1_single"] = 1.0;
    report["n_epsilon"] = 0;
    report["p1_parallel_table"] = json::array();
    emit(common, report, "verdict: not-certifiable\n", out);
    return kExitNotCertifiable;
  }

  const Index samples = sample_budget(null_channel.in_dim());
  const double p1_single = brute_force_p1(null_channel, alts, samples, seed, tol);
  const Index n_epsilon = query_bound(p1_single, epsilon).n_epsilon;

  std::vector<std::array<double, 3>> table;
  Index d_n = 1;
  for (Index n = 1; n <= max_n; ++n) {
    if (d_n > kDefaultDimensionLimit / null_channel.in_dim()) break;
    d_n *= null_channel.in_dim();
    try {
      const double p1_n = p1_parallel(null_channel, alts, n, max_entangled(d_n), tol);
      table.push_back({static_cast<double>(n), p1_n,
                       std::pow(p1_single, static_cast<double>(n))});
    } catch (const DimensionLimitError&) {
      break;
    }
  }

  json report;
  report["command"] = "bound";
  report["verdict"] = "certifiable";
  report["epsilon"] = epsilon;
  report["seed"] = seed;
  report["samples"] = samples;
  report["p1_single"] = p1_single;
  report["n_epsilon"] = n_epsilon;
  json jtable = json::array();
  for (const auto& row : table) {
    jtable.push_back({row[0], row[1], row[2]});
  }
  report["p1_parallel_table"] = jtable;

  std::string text;
  text += "verdict: certifiable\n";
  text += "p1_single (sampled upper bound, " + std::to_string(samples) + " inputs): " +
          fmt(p1_single) + "\n";
  text += "N_epsilon for epsilon = " + fmt(epsilon) + ": " + std::to_string(n_epsilon) + "\n";
  text += "N\tp1_parallel\tp1_single^N\n";
  for (const auto& row : table) {
    text += std::to_string(static_cast<long long>(row[0])) + "\t" + fmt(row[1]) + "\t" +
            fmt(row[2]) + "\n";
  }
  emit(common, report, text, out);
  if (!common.csv_path.empty()) write_csv(common.csv_path, table);
  return kExitCertifiable;
}

int cmd_sic(Index d, const std::string& perm_text, Index max_n, double epsilon,
            const CommonOptions& common, std::ostream& out) {
  const Tolerance tol(common.tol_rel, Tolerance{}.abs_floor);
  const Permutation pi = perm_text.empty()
                             ? Permutation::identity(d * d)
                             : Permutation::parse_cycles(perm_text, d * d);
  const Index k = fixed_points(pi);

  json report;
  report["command"] = "sic";
  report["d"] = d;
  report["k"] = k;
  report["permutation"] = perm_text.empty() ? "()" : perm_text;
  report["epsilon"] = epsilon;

  if (pi.is_identity()) {
    report["verdict"] = "not-certifiable";
    emit(common, report,
         "verdict: not-certifiable (the permuted POVM equals the original)\n", out);
    return kExitNotCertifiable;
  }

  const double p1_bound = sic_p1_bound(d, k);
  const Index n_epsilon = query_bound(p1_bound, epsilon).n_epsilon;

  std::vector<std::array<double, 3>> csv_rows;
  json jtable = json::array();
  std::string text;
  text += "verdict: certifiable\n";
  text += "fixed points k = " + std::to_string(k) + ", single-shot bound (d+k)/(d^2+d) = " +
          fmt(p1_bound) + "\n";
  text += "N_epsilon for epsilon = " + fmt(epsilon) + ": " + std::to_string(n_epsilon) + "\n";
  text += "N\tp1_direct\tbound\t|delta|\n";
  for (Index n = 1; n <= max_n; ++n) {
    double direct;
    try {
      direct = sic_certificate(d, pi, n, tol).p1();
    } catch (const DimensionLimitError&) {
      break;
    }
    const double bound = sic_p1_parallel_bound(d, k, n);
    const double delta = std::abs(direct - bound);
    jtable.push_back({static_cast<double>(n), direct, bound, delta});
    csv_rows.push_back({static_cast<double>(n), direct, bound});
    text += std::to_string(n) + "\t" + fmt(direct) + "\t" + fmt(bound) + "\t" + fmt(delta) +
            "\n";
  }

  report["verdict"] = "certifiable";
  report["n_epsilon"] = n_epsilon;
  report["bound_table"] = jtable;
  emit(common, report, text, out);
  if (!common.csv_path.empty()) write_csv(common.csv_path, csv_rows);
  return kExitCertifiable;
}

int cmd_simulate(const std::string& null_path, const std::vector<std::string>& alt_paths,
                 const std::string& true_side, Index trials, std::uint64_t seed,
                 const CommonOptions& common, std::ostream& out) {
  const Tolerance tol(common.tol_rel, Tolerance{}.abs_floor);
  const QuantumChannel null_channel = load_channel_spec(null_path).channel;
  const std::vector<QuantumChannel> alts = load_alternatives(alt_paths);

  if (!can_certify(null_channel, alts, tol)) {
    if (!common.quiet) out << "verdict: not-certifiable\n";
    return kExitNotCertifiable;
  }

  const PureState psi = max_entangled(null_channel.in_dim());
  const CertificationCertificate cert = build_certificate(null_channel, alts, psi, tol);
  const bool truth_is_null = (true_side == "null");
  const QuantumChannel& true_channel = truth_is_null ? null_channel : alts.front();
  const SimulationReport sim = simulate_protocol(
      true_channel, truth_is_null ? TrueHypothesis::kNull : TrueHypothesis::kAlternative,
      cert, trials, seed);

  json report;
  report["command"] = "simulate";
  report["verdict"] = "certifiable";
  report["true"] = true_side;
  report["trials"] = sim.trials;
  report["seed"] = sim.seed;
  report["empirical_fp_rate"] = sim.empirical_fp_rate;
  report["empirical_fn_rate"] = sim.empirical_fn_rate;
  report["analytic_p1"] = sim.analytic_p1;
  report["fp_std_error"] = sim.fp_std_error;

  std::string text;
  text += "verdict: certifiable\n";
  text += "true channel: " + true_side + ", trials: " + std::to_string(sim.trials) +
          ", seed: " + std::to_string(sim.seed) + "\n";
  text += "analytic p1: " + fmt(sim.analytic_p1) + "\n";
  if (truth_is_null) {
    text += "empirical fp rate: " + fmt(sim.empirical_fp_rate) +
            " (std error " + fmt(sim.fp_std_error) + ")\n";
  } else {
    text += "empirical fn rate: " + fmt(sim.empirical_fn_rate) +
            (sim.empirical_fn_rate == 0.0 ? " (exactly zero, as the construction guarantees)"
                                          : " (NONZERO: construction violated)") +
            "\n";
  }
  emit(common, report, text, out);
  return kExitCertifiable;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"certichan: zero-false-negative certification of quantum channels"};
  app.require_subcommand(1);

  CommonOptions check_common, bound_common, sic_common, sim_common;

  // check
  auto* check = app.add_subcommand("check", "Decide certifiability from channel supports");
  std::string check_null;
  std::vector<std::string> check_alts;
  check->add_option("null", check_null, "Null-hypothesis channel spec file")->required();
  check->add_option("alts", check_alts, "Alternative channel spec files")->required();
  add_common(check, &check_common);

  // bound
  auto* bound = app.add_subcommand("bound", "Single-shot p1, query bound and parallel table");
  std::string bound_null;
  std::vector<std::string> bound_alts;
  double bound_epsilon = 0.01;
  Index bound_max_n = 3;
  std::uint64_t bound_seed = 0;
  bound->add_option("null", bound_null, "Null-hypothesis channel spec file")->required();
  bound->add_option("alts", bound_alts, "Alternative channel spec files")->required();
  bound->add_option("--epsilon", bound_epsilon, "Target false-positive level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  bound->add_option("--max-n", bound_max_n, "Largest parallel copy count to evaluate")
      ->check(CLI::PositiveNumber);
  bound->add_option("--seed", bound_seed, "Seed for the input-state search");
  add_common(bound, &bound_common);

  // sic
  auto* sic = app.add_subcommand("sic", "Closed-form and direct SIC POVM certification");
  Index sic_d = 2;
  std::string sic_perm;
  Index sic_max_n = 3;
  double sic_epsilon = 0.01;
  sic->add_option("--d", sic_d, "SIC dimension (2 or 3)")->required();
  sic->add_option("--perm", sic_perm,
                  "Permutation of d^2 effects in one-based cycle notation, e.g. \"(1 2)(3 4)\"");
  sic->add_option("--n", sic_max_n, "Largest parallel copy count")->check(CLI::PositiveNumber);
  sic->add_option("--epsilon", sic_epsilon, "Target false-positive level")
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  add_common(sic, &sic_common);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo run of the certification protocol");
  std::string sim_null;
  std::vector<std::string> sim_alts;
  std::string sim_true = "null";
  Index sim_trials = 100000;
  std::uint64_t sim_seed = 0;
  simulate->add_option("null", sim_null, "Null-hypothesis channel spec file")->required();
  simulate->add_option("alts", sim_alts, "Alternative channel spec files")->required();
  simulate->add_option("--true", sim_true, "Which channel is secretly in place")
      ->check(CLI::IsMember({"null", "alt"}));
  simulate->add_option("--trials", sim_trials, "Number of protocol runs")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_seed, "Seed; trial t uses substream (seed, t)");
  add_common(simulate, &sim_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitCertifiable;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_null, check_alts, check_common, out);
    if (bound->parsed()) {
      return cmd_bound(bound_null, bound_alts, bound_epsilon, bound_max_n, bound_seed,
                       bound_common, out);
    }
    if (sic->parsed()) {
      return cmd_sic(sic_d, sic_perm, sic_max_n, sic_epsilon, sic_common, out);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_null, sim_alts, sim_true, sim_trials, sim_seed, sim_common, out);
    }
  } catch (const NumericalIntegrityError& e) {
    err << "numerical-integrity error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const NoCertificateError& e) {
    err << "not certifiable: " << e.what() << "\n";
    return kExitNotCertifiable;
  } catch (const DimensionLimitError& e) {
    err << "dimension limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "usage error: no subcommand given\n";
  return kExitUsage;
}

}  // namespace certichan
