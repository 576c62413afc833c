// Copyright 2026 The hlu-compiler Authors
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

// hlu: command-line front end. Exit codes: 0 success, 1 input error,
// 2 infeasible request.

#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hlu/error.hpp"
#include "hlu/gate.hpp"
#include "hlu/io.hpp"
#include "hlu/linalg.hpp"
#include "hlu/simulation.hpp"
#include "hlu/synthesis.hpp"

namespace {

using hlu::io::Json;

struct Options {
  std::string source;
  std::string target;
  std::string gate;
  std::string protocol;
  std::string plan;
  std::string out;
  std::string report;
  double time = 1.0;
  int window = 3;
  long slices = 4096;
  double tolerance = 1e-9;
  bool hybrid = false;
};

void emit(const Options& o, const Json& doc, const Json& report) {
  if (!o.out.empty()) hlu::io::write_file(o.out, doc);
  if (!o.report.empty()) hlu::io::write_file(o.report, report);
}

std::string vec(const hlu::Vector3& v) {
  std::ostringstream s;
  s.precision(17);
  s << "(" << v(0) << ", " << v(1) << ", " << v(2) << ")";
  return s.str();
}

int cmd_simulate(const Options& o) {
  const hlu::PauliRep src = hlu::io::hamiltonian_from_json(hlu::io::read_file(o.source));
  const hlu::PauliRep tgt = hlu::io::hamiltonian_from_json(hlu::io::read_file(o.target));
  const hlu::HluProtocol p = hlu::compile_simulation(src, tgt);
  const hlu::TwoQubitOperator ideal = hlu::expm_hermitian(hlu::from_pauli(tgt), o.time);
  const hlu::VerificationReport r = hlu::verify(p, src, ideal, o.time, o.slices);
  const hlu::PauliRep eff = hlu::effective_hamiltonian(p, src);

  Json report = hlu::io::report_to_json(r);
  report["overhead"] = p.overhead;
  report["effective_error"] = hlu::max_abs_diff(eff, tgt);
  report["t"] = o.time;
  emit(o, hlu::io::protocol_to_json(p), report);

  std::cout.precision(17);
  std::cout << "feasible: overhead c = " << p.overhead << " (" << p.steps.size() << " steps)\n"
            << "effective Hamiltonian error = " << report["effective_error"].get<double>() << '\n'
            << "distance at " << o.slices << " slices, t' = " << o.time << ": " << r.distance
            << '\n';
  return 0;
}

int cmd_synthesize(const Options& o) {
  const hlu::TwoQubitOperator u = hlu::io::gate_from_json(hlu::io::read_file(o.gate));
  const hlu::PauliRep src = hlu::io::hamiltonian_from_json(hlu::io::read_file(o.source));
  const hlu::SynthesisPlan plan =
      o.hybrid ? hlu::hybrid_plan(u, src, o.window) : hlu::synthesize_gate(u, src, o.window);
  const hlu::VerificationReport r = hlu::verify_plan(plan, src, o.slices);

  Json report = hlu::io::report_to_json(r);
  report["overhead"] = plan.overhead;
  report["inhomogeneous_layers"] = plan.inhomogeneous_layers();
  emit(o, hlu::io::plan_to_json(plan), report);

  std::cout.precision(17);
  std::cout << "feasible: overhead c = " << plan.overhead << '\n'
            << "canonical = " << vec(plan.canonical) << '\n'
            << "shift n = (" << plan.shift(0) << ", " << plan.shift(1) << ", " << plan.shift(2)
            << "), perm = " << plan.perm.name() << '\n'
            << "simulated = " << vec(plan.simulated) << '\n'
            << "distance at " << o.slices << " slices: " << r.distance << '\n';
  return 0;
}

// Runs a protocol (or plan) at slices and 2*slices and reports the measured
// convergence order.
int cmd_verify(const Options& o) {
  const hlu::PauliRep src = hlu::io::hamiltonian_from_json(hlu::io::read_file(o.source));
  const Json target = hlu::io::read_file(o.target);
  std::function<hlu::VerificationReport(long)> run;

  if (!o.plan.empty()) {
    hlu::SynthesisPlan plan = hlu::io::plan_from_json(hlu::io::read_file(o.plan));
    plan.target = hlu::io::gate_from_json(target);
    run = [plan, src](long n) { return hlu::verify_plan(plan, src, n); };
  } else {
    const hlu::HluProtocol p = hlu::io::protocol_from_json(hlu::io::read_file(o.protocol));
    hlu::TwoQubitOperator u;
    if (target.value("kind", "") == "gate") {
      u = hlu::io::gate_from_json(target);
    } else {
      u = hlu::expm_hermitian(hlu::from_pauli(hlu::io::hamiltonian_from_json(target)), o.time);
    }
    const double t = o.time;
    run = [p, src, u, t](long n) { return hlu::verify(p, src, u, t, n); };
  }

  const hlu::VerificationReport coarse = run(o.slices);
  const hlu::VerificationReport fine = run(2 * o.slices);
  Json report = hlu::io::report_to_json(coarse);
  Json sweep = Json::array({hlu::io::report_to_json(coarse), hlu::io::report_to_json(fine)});
  report["sweep"] = sweep;
  const bool converged = coarse.distance <= o.tolerance;
  std::optional<double> ratio;
  if (!converged && fine.distance > 0.0) ratio = coarse.distance / fine.distance;
  if (ratio) {
    report["error_ratio"] = *ratio;
    report["measured_order"] = std::log2(*ratio);
  }
  emit(o, report, report);

  std::cout.precision(6);
  std::cout << "slices " << coarse.n_slices << ": distance " << coarse.distance << ", fidelity "
            << coarse.fidelity << '\n'
            << "slices " << fine.n_slices << ": distance " << fine.distance << ", fidelity "
            << fine.fidelity << '\n';
  if (ratio)
    std::cout << "error ratio " << *ratio << ", measured order " << std::log2(*ratio) << '\n';
  else
    std::cout << "exact to tolerance " << o.tolerance << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous local unitary control compiler"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", o.out, "Output document");
    cmd->add_option("--report", o.report, "Verification report output");
    cmd->add_option("--slices", o.slices, "Trotter slices")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tolerance", o.tolerance, "Verification tolerance")->capture_default_str();
  };

  auto* sim = app.add_subcommand("simulate", "Compile a Hamiltonian simulation protocol");
  sim->add_option("source", o.source, "Source Hamiltonian")->required();
  sim->add_option("target", o.target, "Target Hamiltonian")->required();
  sim->add_option("--time", o.time, "Simulated time t'")->capture_default_str();
  add_common(sim);

  auto* syn = app.add_subcommand("synthesize", "Synthesize a gate plan");
  syn->add_option("gate", o.gate, "Gate document")->required();
  syn->add_option("source", o.source, "Source Hamiltonian")->required();
  syn->add_option("--window", o.window, "Initial shift search window")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  syn->add_flag("--hybrid", o.hybrid, "Allow two inhomogeneous local layers");
  add_common(syn);

  auto* ver = app.add_subcommand("verify", "Verify a protocol or plan against a target");
  std::vector<std::string> files;
  ver->add_option("files", files, "[protocol] source target")->required()->expected(2, 3);
  ver->add_option("--plan", o.plan, "Plan document instead of a protocol");
  ver->add_option("--time", o.time, "Simulated time t'")->capture_default_str();
  add_common(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (ver->parsed()) {
    const std::size_t want = o.plan.empty() ? 3 : 2;
    if (files.size() != want) {
      std::cerr << "error [schema-violation]: verify takes "
                << (want == 3 ? "protocol source target" : "--plan plan source target") << '\n';
      return 1;
    }
    if (want == 3) o.protocol = files[0];
    o.source = files[want - 2];
    o.target = files[want - 1];
  }

  try {
    if (sim->parsed()) return cmd_simulate(o);
    if (syn->parsed()) return cmd_synthesize(o);
    return cmd_verify(o);
  } catch (const hlu::HluError& e) {
    std::cerr << (e.is_infeasible() ? "infeasible " : "error ") << e.what() << '\n';
    return e.is_infeasible() ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error [internal]: " << e.what() << '\n';
    return 1;
  }
}
