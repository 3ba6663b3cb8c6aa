// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QTELE_TOOLS_CLI_COMMANDS_H_
#define QTELE_TOOLS_CLI_COMMANDS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cli/config.h"
#include <nlohmann/json.hpp>

namespace qtele::cli {

// Exit codes of the qtele tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

std::string tool_version();

// Value rounded to 15 significant digits, so serialized output is stable.
double round15(double v);
// "%.15g", with "nan" for NaN.
std::string format15(double v);

// Runs the protocol for `config` and returns the result document: config
// echo, tool version, resolved input and RunStatistics fields.
nlohmann::json teleport_document(const ExperimentConfig& config);
// Document rendered in config.format.
std::string render_teleport(const ExperimentConfig& config);

struct MinXReport {
  std::array<double, 4> channel;
  double min_x;
  // Lowest eigenvalue of P_1..P_5 at x = min_x.
  std::array<double, 5> min_eigenvalues;
};
MinXReport min_x_report(const ChannelParams& channel);
std::string render_min_x(const MinXReport& report, OutputFormat format);

// One-parameter channel family (cos^2 t, cos t sin t, sin t cos t, sin^2 t),
// normalized for every t and uniform at t = pi/4. Valid for 0 < t < pi/2.
std::array<double, 4> skew_channel(double t);

struct ScanSpec {
  std::string param;  // "x" or "skew"
  double start = 0.0;
  double stop = 0.0;
  std::uint64_t steps = 1;
};

struct ScanRow {
  double param;
  double exact_success_prob;
  double min_x;
  double conclusive_rate;
  double mean_fidelity;
};

// Throws ConfigError on a malformed spec and PositivityError when a row's x
// is inadmissible.
std::vector<ScanRow> run_scan(const ExperimentConfig& config, const ScanSpec& spec);
std::string render_scan(const std::vector<ScanRow>& rows, const ScanSpec& spec,
                        OutputFormat format);

struct ChshReport {
  std::array<double, 4> angles;  // a1, a2, b1, b2
  std::array<double, 4> correlations;
  double s;
  std::optional<std::uint64_t> trials;
  std::array<double, 4> sampled{};
  std::array<double, 4> sampled_errors{};
  double sampled_s = 0.0;
  double sampled_s_error = 0.0;
};
ChshReport chsh_report(const std::array<double, 4>& angles, std::optional<std::uint64_t> trials,
                       std::uint64_t seed);
std::string render_chsh(const ChshReport& report, OutputFormat format);

// Entry point shared by the binary and the tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtele::cli

#endif  // QTELE_TOOLS_CLI_COMMANDS_H_
