// Copyright 2026 The qcomb developers
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

// Command-line front end: verify causal normalization, synthesize the
// minimal-ancilla isometry chain, round-trip combs through synthesis,
// build/evaluate the optimal unitary-inversion example, twirl combs, and
// generate random networks. Exit codes: 0 success, 1 verification or
// acceptance failure, 2 malformed input.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcomb/comb.hpp"
#include "qcomb/inversion.hpp"
#include "qcomb/io.hpp"
#include "qcomb/synthesis.hpp"
#include "qcomb/tensor.hpp"
#include "qcomb/types.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  double verify_tol = qcomb::default_verify_tol;
  double rank_eps = qcomb::default_rank_eps;
  double roundtrip_tol = qcomb::default_roundtrip_tol;
  std::uint64_t seed = 0;
  bool json_output = false;
};

void add_global_flags(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--tol", cfg.verify_tol, "Verification tolerance")->check(CLI::PositiveNumber);
  cmd.add_option("--rank-eps", cfg.rank_eps, "Relative eigenvalue threshold for numerical rank")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", cfg.seed, "Random seed");
  cmd.add_flag("--json", cfg.json_output, "Machine-readable JSON report on stdout");
}

int run_verify(const std::string& comb_file, const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::load_comb(comb_file);
  const qcomb::NormalizationReport report = qcomb::verify_comb(comb, cfg.verify_tol);
  if (cfg.json_output) {
    qcomb::json j{{"residuals", report.residuals},
                  {"min_eigenvalue", report.min_eigenvalue},
                  {"hermiticity_residual", report.hermiticity_residual},
                  {"tolerance", report.tolerance},
                  {"pass", report.pass}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.summary() << "\n";
  }
  return report.pass ? kExitOk : kExitFail;
}

int run_synthesize(const std::string& comb_file, const std::string& out_file,
                   const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::load_comb(comb_file);
  const qcomb::NormalizationReport report = qcomb::verify_comb(comb, cfg.verify_tol);
  if (!report.pass) {
    std::cerr << "comb fails verification; not synthesizing\n" << report.summary() << "\n";
    return kExitFail;
  }
  const qcomb::SynthesizedNetwork net = qcomb::synthesize(comb, cfg.verify_tol, cfg.rank_eps);
  if (!out_file.empty()) qcomb::save_network(net, out_file);
  if (cfg.json_output) {
    qcomb::json j{{"ancilla_dims", net.ancilla_dims}};
    if (!out_file.empty()) j["network_file"] = out_file;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ancilla_dims:";
    for (qcomb::Index r : net.ancilla_dims) std::cout << " " << r;
    std::cout << "\n";
    if (!out_file.empty()) std::cout << "network written to " << out_file << "\n";
  }
  return kExitOk;
}

int run_roundtrip(const std::string& comb_file, const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::load_comb(comb_file);
  const qcomb::NormalizationReport report = qcomb::verify_comb(comb, cfg.verify_tol);
  if (!report.pass) {
    std::cerr << "comb fails verification; not synthesizing\n" << report.summary() << "\n";
    return kExitFail;
  }
  const qcomb::SynthesizedNetwork net = qcomb::synthesize(comb, cfg.verify_tol, cfg.rank_eps);
  const double dist = qcomb::frobenius_distance(qcomb::reconstruct_choi(net), comb.matrix);
  const bool ok = dist <= cfg.roundtrip_tol;
  if (cfg.json_output) {
    qcomb::json j{{"distance", dist},
                  {"tolerance", cfg.roundtrip_tol},
                  {"ancilla_dims", net.ancilla_dims},
                  {"pass", ok}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "roundtrip distance: " << dist << (ok ? " (PASS)" : " (FAIL)") << "\n";
  }
  return ok ? kExitOk : kExitFail;
}

int run_invert(int dim, const std::string& out_file, const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::optimal_inversion_comb(dim);
  qcomb::save_comb(comb, out_file);
  if (cfg.json_output) {
    std::cout << qcomb::json{{"comb_file", out_file}, {"dim", dim}}.dump(2) << "\n";
  } else {
    std::cout << "optimal inversion comb (d=" << dim << ") written to " << out_file << "\n";
  }
  return kExitOk;
}

int run_fidelity(const std::string& comb_file, const std::string& unitary_file,
                 std::optional<std::size_t> mc_samples, const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::load_comb(comb_file);
  if (!unitary_file.empty()) {
    const qcomb::ComplexMatrix u = qcomb::load_matrix(unitary_file);
    const double f = qcomb::gate_fidelity(comb, u);
    if (cfg.json_output)
      std::cout << qcomb::json{{"fidelity", f}, {"unitary_file", unitary_file}}.dump(2) << "\n";
    else
      std::cout << "gate fidelity: " << f << "\n";
    return kExitOk;
  }
  if (mc_samples) {
    const qcomb::MonteCarloEstimate est = qcomb::average_fidelity_mc(comb, *mc_samples, cfg.seed);
    if (cfg.json_output)
      std::cout << qcomb::json{{"mean", est.mean},
                               {"std_error", est.std_error},
                               {"samples", est.samples},
                               {"seed", cfg.seed}}
                       .dump(2)
                << "\n";
    else
      std::cout << "average fidelity (Monte Carlo, n=" << est.samples << "): " << est.mean
                << " +/- " << est.std_error << "\n";
    return kExitOk;
  }
  const double f = qcomb::average_fidelity_covariant(comb, cfg.verify_tol);
  if (cfg.json_output)
    std::cout << qcomb::json{{"average_fidelity", f}}.dump(2) << "\n";
  else
    std::cout << "average fidelity (exact, covariant): " << f << "\n";
  return kExitOk;
}

int run_twirl(const std::string& comb_file, const std::string& out_file, const RunConfig& cfg) {
  const qcomb::QuantumComb comb = qcomb::load_comb(comb_file);
  qcomb::save_comb(qcomb::twirl(comb), out_file);
  if (cfg.json_output)
    std::cout << qcomb::json{{"comb_file", out_file}}.dump(2) << "\n";
  else
    std::cout << "twirled comb written to " << out_file << "\n";
  return kExitOk;
}

int run_random(const std::vector<int>& dims, const std::vector<qcomb::Index>& anc,
               const std::string& out_file, const std::string& net_file, const RunConfig& cfg) {
  const qcomb::WireLayout layout(dims);
  const qcomb::SynthesizedNetwork net = qcomb::random_network(layout, anc, cfg.seed);
  const qcomb::QuantumComb comb(layout, qcomb::reconstruct_choi(net));
  qcomb::save_comb(comb, out_file);
  if (!net_file.empty()) qcomb::save_network(net, net_file);
  if (cfg.json_output) {
    qcomb::json j{{"comb_file", out_file}, {"seed", cfg.seed}};
    if (!net_file.empty()) j["network_file"] = net_file;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "random network comb written to " << out_file << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum comb toolkit: verification, minimal-ancilla synthesis, and the "
               "optimal unitary-inversion example"};
  app.require_subcommand(1);

  RunConfig cfg;

  std::string comb_file, out_file, net_file, unitary_file;
  int dim = 2;
  std::vector<int> dims;
  std::vector<qcomb::Index> anc;
  std::optional<std::size_t> mc_samples;
  std::size_t mc_value = 0;

  CLI::App* verify = app.add_subcommand("verify", "Check the causal normalization of a comb");
  verify->add_option("comb", comb_file, "Comb JSON file")->required();
  add_global_flags(*verify, cfg);

  CLI::App* synth = app.add_subcommand("synthesize", "Extract the minimal isometry chain");
  synth->add_option("comb", comb_file, "Comb JSON file")->required();
  synth->add_option("-o,--output", out_file, "Network JSON output file");
  add_global_flags(*synth, cfg);

  CLI::App* roundtrip =
      app.add_subcommand("roundtrip", "Synthesize, rebuild the Choi operator, report distance");
  roundtrip->add_option("comb", comb_file, "Comb JSON file")->required();
  roundtrip->add_option("--roundtrip-tol", cfg.roundtrip_tol, "Round-trip distance tolerance")
      ->check(CLI::PositiveNumber);
  add_global_flags(*roundtrip, cfg);

  CLI::App* invert = app.add_subcommand("invert", "Write the optimal unitary-inversion comb");
  invert->add_option("--dim", dim, "Wire dimension d")->check(CLI::Range(2, 16));
  invert->add_option("-o,--output", out_file, "Comb JSON output file")->required();
  add_global_flags(*invert, cfg);

  CLI::App* fidelity = app.add_subcommand(
      "fidelity", "Inversion fidelity: exact covariant value, one unitary, or Monte Carlo");
  fidelity->add_option("comb", comb_file, "Comb JSON file")->required();
  CLI::Option* uopt = fidelity->add_option("--unitary", unitary_file,
                                           "Matrix JSON file with the unitary to invert");
  CLI::Option* mopt =
      fidelity->add_option("--mc", mc_value, "Number of Haar Monte-Carlo samples");
  uopt->excludes(mopt);
  add_global_flags(*fidelity, cfg);

  CLI::App* twirl_cmd = app.add_subcommand("twirl", "Project a 4-wire comb onto its group average");
  twirl_cmd->add_option("comb", comb_file, "Comb JSON file")->required();
  twirl_cmd->add_option("-o,--output", out_file, "Comb JSON output file")->required();
  add_global_flags(*twirl_cmd, cfg);

  CLI::App* random_cmd =
      app.add_subcommand("random", "Comb of a random isometry network (test instances)");
  random_cmd->add_option("--dims", dims, "Wire dimensions, ascending labels (e.g. 2,2,2,2)")
      ->required()
      ->delimiter(',');
  random_cmd->add_option("--anc", anc, "Ancilla dimensions r_1..r_N (e.g. 2,2)")
      ->required()
      ->delimiter(',');
  random_cmd->add_option("-o,--output", out_file, "Comb JSON output file")->required();
  random_cmd->add_option("--net", net_file, "Also write the network JSON here");
  add_global_flags(*random_cmd, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (fidelity->parsed() && mopt->count() > 0) mc_samples = mc_value;

    if (verify->parsed()) return run_verify(comb_file, cfg);
    if (synth->parsed()) return run_synthesize(comb_file, out_file, cfg);
    if (roundtrip->parsed()) return run_roundtrip(comb_file, cfg);
    if (invert->parsed()) return run_invert(dim, out_file, cfg);
    if (fidelity->parsed()) return run_fidelity(comb_file, unitary_file, mc_samples, cfg);
    if (twirl_cmd->parsed()) return run_twirl(comb_file, out_file, cfg);
    if (random_cmd->parsed()) return run_random(dims, anc, out_file, net_file, cfg);
  } catch (const qcomb::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qcomb::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qcomb::NumericalError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const qcomb::ValidationError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
