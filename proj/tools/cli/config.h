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

#ifndef QTELE_TOOLS_CLI_CONFIG_H_
#define QTELE_TOOLS_CLI_CONFIG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>
#include "qtele/povm.h"
#include "qtele/protocol.h"

namespace qtele::cli {

inline constexpr int kSchemaVersion = 1;

// Invalid configuration. The message starts with the offending field name.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { kJson, kCsv };

struct ExperimentConfig {
  std::array<double, 4> channel = {0.5, 0.5, 0.5, 0.5};
  // Empty means "random": Haar-random, drawn from the seed.
  std::optional<std::array<Complex, 4>> input;
  // Empty means "auto": the minimal admissible x.
  std::optional<double> x;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::kJson;
};

// Throws ConfigError on unknown keys, wrong types or invalid numerics.
ExperimentConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const ExperimentConfig& config);

// Checks the numeric invariants (normalized positive channel, normalized
// input, positive finite x, trials >= 1). Throws ConfigError.
void validate(const ExperimentConfig& config);

ChannelParams channel_of(const ExperimentConfig& config);
// Resolves "random" using a stream reserved for input generation.
InputState input_of(const ExperimentConfig& config);

std::string format_name(OutputFormat format);
OutputFormat parse_format(const std::string& name);

}  // namespace qtele::cli

#endif  // QTELE_TOOLS_CLI_CONFIG_H_
