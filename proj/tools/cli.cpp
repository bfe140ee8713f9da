// Copyright 2026 The qdiv Authors
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

#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qdiv/arith.hpp"
#include "qdiv/errors.hpp"
#include "qdiv/lowering.hpp"
#include "qdiv/qasm.hpp"
#include "qdiv/refmodel.hpp"
#include "qdiv/resources.hpp"
#include "qdiv/revsim.hpp"
#include "qdiv/verify.hpp"

namespace qdiv::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxBuildWidth = 64;
constexpr std::size_t kMaxSimulationWidth = 32;

const std::map<std::string, Level> kLevels = {
    {"logical", Level::Logical},
    {"toffoli", Level::ToffoliCnot},
    {"cliffordt", Level::CliffordT},
};

std::size_t statevector_limit() {
  if (const char *env = std::getenv("QDIV_WIDTH_LIMIT")) {
    try {
      return std::stoul(env);
    } catch (const std::exception &) {
    }
  }
  return kDefaultStateVectorWidthLimit;
}

json layout_json(const RegisterLayout &layout) {
  return {
      {"dividend", layout.q_bits},
      {"divisor", layout.d_bits},
      {"ancilla", layout.r_bits},
      {"quotient", layout.quotient_bits},
      {"remainder", layout.remainder_bits},
  };
}

json counterexample_json(const std::optional<Counterexample> &cx) {
  if (!cx) return nullptr;
  return {
      {"dividend", cx->input.dividend},
      {"divisor", cx->input.divisor},
      {"quotient", cx->observed.quotient},
      {"remainder", cx->observed.remainder},
      {"expected_quotient", cx->expected.quotient},
      {"expected_remainder", cx->expected.remainder},
      {"divisor_preserved", cx->observed.divisor_preserved},
  };
}

std::string domain_statement(std::size_t n) {
  return "0 <= dividend < 2^" + std::to_string(n) + ", 1 <= divisor <= 2^" +
         std::to_string(n - 1) + " = " + std::to_string(max_valid_divisor(n));
}

int cmd_build(std::size_t n, Level level, const std::string &output,
              std::ostream &out, std::ostream &err) {
  const DividerInstance divider = build_divider(n);
  const Circuit circuit = lower(divider.circuit, level);
  std::string qasm;
  try {
    qasm = export_qasm(circuit);
  } catch (const Error &e) {
    err << "error: " << e.what() << " (use --level toffoli or cliffordt)\n";
    return kUsageError;
  }
  if (output.empty() || output == "-") {
    out << qasm;
  } else {
    std::ofstream file(output, std::ios::binary);
    file << qasm;
    if (!file) {
      err << "error: cannot write " << output << '\n';
      return kInternalFailure;
    }
  }
  err << layout_json(divider.layout).dump() << '\n';
  return kOk;
}

int cmd_run(std::size_t n, std::uint64_t dividend, std::uint64_t divisor,
            Level level, std::ostream &out, std::ostream &err) {
  try {
    check_division_domain(dividend, divisor, n);
  } catch (const Error &e) {
    err << "error: " << e.what() << "\nvalid domain: " << domain_statement(n) << '\n';
    return kDomainError;
  }
  const DividerInstance divider = build_divider(n);
  const RegisterLayout &layout = divider.layout;
  const BasisState input = divider_input(divider, dividend, divisor);

  BasisState output;
  if (level == Level::CliffordT) {
    const Circuit lowered = lower(divider.circuit, level);
    StateVector sv;
    try {
      sv = run_statevector(lowered, input, statevector_limit());
    } catch (const Error &e) {
      err << "error: " << e.what() << " (set QDIV_WIDTH_LIMIT or use --level logical)\n";
      return kUsageError;
    }
    std::optional<std::uint64_t> hit;
    for (std::size_t i = 0; i < sv.amplitudes.size(); ++i) {
      if (std::abs(std::norm(sv.amplitudes[i]) - 1.0) <= kNormTolerance) hit = i;
    }
    if (!hit) {
      err << "error: Clifford+T output is not a basis state\n";
      return kInternalFailure;
    }
    output = BasisState::from_index(lowered.width(), *hit);
  } else {
    output = run_basis(lower(divider.circuit, level), input);
  }

  const DivResult expected = restoring_divide(dividend, divisor, n);
  const std::uint64_t quotient = output.read(layout.quotient_bits);
  const std::uint64_t remainder = output.read(layout.remainder_bits);
  const bool divisor_preserved = output.read(layout.d_bits) == divisor;
  const bool oracle_agrees = quotient == expected.quotient &&
                             remainder == expected.remainder &&
                             quotient == dividend / divisor &&
                             remainder == dividend % divisor;
  const json result = {
      {"n", n},
      {"dividend", dividend},
      {"divisor", divisor},
      {"level", level_name(level)},
      {"quotient", quotient},
      {"remainder", remainder},
      {"divisor_preserved", divisor_preserved},
      {"oracle_agrees", oracle_agrees},
  };
  out << result.dump(2) << '\n';
  return divisor_preserved && oracle_agrees ? kOk : kInternalFailure;
}

int cmd_resources(std::size_t n, Level level, std::ostream &out) {
  const DividerInstance divider = build_divider(n);
  const Circuit circuit = lower(divider.circuit, level);
  const ResourceReport report = with_divider_prediction(
      count(circuit, static_cast<std::int64_t>(divider.ancillae())), n);
  json result = {
      {"level", level_name(level)},
      {"resources", to_json(report)},
      {"comparison", to_json(comparison_report(n))},
  };
  out << result.dump(2) << '\n';
  return report.matches_prediction ? kOk : kInternalFailure;
}

int cmd_verify(std::size_t n, bool exhaustive, std::size_t samples,
               std::uint64_t seed, std::size_t jobs, std::ostream &out,
               std::ostream &err) {
  if (exhaustive && n > kMaxExhaustiveWidth) {
    err << "error: --exhaustive is limited to n <= " << kMaxExhaustiveWidth << '\n';
    return kUsageError;
  }
  if (!exhaustive && samples == 0) {
    err << "error: pass --exhaustive or --random <samples>\n";
    return kUsageError;
  }
  const DividerInstance divider = build_divider(n);
  const std::vector<DivisionCase> cases =
      exhaustive ? exhaustive_cases(n) : random_cases(n, samples, seed);
  const SweepResult sweep = verify_cases(divider, cases, jobs);
  json result = {
      {"n", n},
      {"mode", exhaustive ? "exhaustive" : "random"},
      {"domain", domain_statement(n)},
      {"cases", cases.size()},
      {"passed", sweep.passed},
      {"failed", sweep.failed},
      {"counterexample", counterexample_json(sweep.first_failure)},
  };
  if (!exhaustive) result["seed"] = seed;
  out << result.dump(2) << '\n';
  return sweep.failed == 0 ? kOk : kInternalFailure;
}

int cmd_domain(std::size_t n, std::ostream &out, std::ostream &err) {
  if (n > kMaxExhaustiveWidth) {
    err << "error: domain mapping is limited to n <= " << kMaxExhaustiveWidth << '\n';
    return kUsageError;
  }
  const DomainReport report = map_valid_domain(n);
  const json result = {
      {"n", n},
      {"hypothesis", domain_statement(n)},
      {"matches_hypothesis", report.matches_hypothesis},
      {"valid_divisors", report.valid_divisors},
      {"invalid_divisors", report.invalid_divisors},
      {"total_pairs", report.total_pairs},
      {"failing_pairs", report.failing_pairs},
      {"counterexample", counterexample_json(report.counterexample)},
  };
  out << result.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Restoring integer division circuits over Clifford+T", "qdiv"};
  app.require_subcommand(1);

  std::size_t n = 0;
  std::string output;
  Level build_level = Level::CliffordT;
  Level run_level = Level::Logical;
  Level resources_level = Level::CliffordT;
  std::uint64_t dividend = 0;
  std::uint64_t divisor = 0;
  bool exhaustive = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;

  auto add_n = [&](CLI::App *cmd, std::size_t max) {
    cmd->add_option("--n", n, "operand width in qubits")
        ->required()
        ->check(CLI::Range(std::size_t{1}, max));
  };
  auto add_level = [&](CLI::App *cmd, Level &level) {
    cmd->add_option("--level", level, "logical, toffoli or cliffordt")
        ->transform(CLI::CheckedTransformer(kLevels, CLI::ignore_case));
  };

  auto *build = app.add_subcommand("build", "emit the divider as OpenQASM 2.0");
  add_n(build, kMaxBuildWidth);
  add_level(build, build_level);
  build->add_option("--output,-o", output, "output path (default: stdout)");

  auto *run_cmd = app.add_subcommand("run", "divide one input through the circuit");
  add_n(run_cmd, kMaxSimulationWidth);
  run_cmd->add_option("--dividend", dividend)->required();
  run_cmd->add_option("--divisor", divisor)->required();
  add_level(run_cmd, run_level);

  auto *resources = app.add_subcommand("resources", "T-count and ancilla report");
  add_n(resources, kMaxBuildWidth);
  add_level(resources, resources_level);

  auto *verify = app.add_subcommand("verify", "compare the circuit against divmod");
  add_n(verify, kMaxSimulationWidth);
  auto *ex = verify->add_flag("--exhaustive", exhaustive, "every in-domain pair");
  verify->add_option("--random", samples, "number of random samples")->excludes(ex);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto *domain = app.add_subcommand("domain", "map the divisors the circuit handles");
  add_n(domain, kMaxExhaustiveWidth);

  // CLI11 expects argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    if (*build) return cmd_build(n, build_level, output, out, err);
    if (*run_cmd) return cmd_run(n, dividend, divisor, run_level, out, err);
    if (*resources) return cmd_resources(n, resources_level, out);
    if (*verify) return cmd_verify(n, exhaustive, samples, seed, jobs, out, err);
    if (*domain) return cmd_domain(n, out, err);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  }
  return kUsageError;
}

}  // namespace qdiv::cli
