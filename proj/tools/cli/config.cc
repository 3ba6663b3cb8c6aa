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

#include "cli/config.h"

#include <cmath>
#include <limits>
#include <set>

#include "qtele/errors.h"
#include "qtele/rng.h"

namespace qtele::cli {
namespace {

using nlohmann::json;

// Stream index reserved for drawing a random input; trial streams use
// 0..trials-1.
constexpr std::uint64_t kInputStream = std::numeric_limits<std::uint64_t>::max();

double finite_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field + ": expected a number");
  double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(field + ": must be finite");
  return d;
}

std::uint64_t unsigned_integer(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) {
    if (v.is_number_integer()) throw ConfigError(field + ": must not be negative");
    throw ConfigError(field + ": expected a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

}  // namespace

std::string format_name(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ConfigError("format: expected \"json\" or \"csv\", got \"" + name + "\"");
}

ExperimentConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> kKnown = {"channel", "input",       "x",      "trials",
                                               "seed",    "output_path", "format", "schema_version"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKnown.count(key)) throw ConfigError(key + ": unknown config field");
  }

  ExperimentConfig config;
  if (doc.contains("channel")) {
    const json& ch = doc["channel"];
    if (!ch.is_array() || ch.size() != 4) {
      throw ConfigError("channel: expected an array of four numbers");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      config.channel[i] = finite_number(ch[i], "channel[" + std::to_string(i) + "]");
    }
  }
  if (doc.contains("input")) {
    const json& in = doc["input"];
    if (in.is_string()) {
      if (in.get<std::string>() != "random") {
        throw ConfigError("input: the only string value accepted is \"random\"");
      }
    } else if (in.is_array() && in.size() == 4) {
      std::array<Complex, 4> coeffs;
      for (std::size_t i = 0; i < 4; ++i) {
        std::string field = "input[" + std::to_string(i) + "]";
        if (!in[i].is_array() || in[i].size() != 2) {
          throw ConfigError(field + ": expected a [re, im] pair");
        }
        coeffs[i] = Complex(finite_number(in[i][0], field), finite_number(in[i][1], field));
      }
      config.input = coeffs;
    } else {
      throw ConfigError("input: expected \"random\" or four [re, im] pairs");
    }
  }
  if (doc.contains("x")) {
    const json& x = doc["x"];
    if (x.is_string()) {
      if (x.get<std::string>() != "auto") {
        throw ConfigError("x: the only string value accepted is \"auto\"");
      }
    } else {
      config.x = finite_number(x, "x");
    }
  }
  if (doc.contains("trials")) config.trials = unsigned_integer(doc["trials"], "trials");
  if (doc.contains("seed")) config.seed = unsigned_integer(doc["seed"], "seed");
  if (doc.contains("output_path")) {
    if (!doc["output_path"].is_string()) throw ConfigError("output_path: expected a string");
    config.output_path = doc["output_path"].get<std::string>();
  }
  if (doc.contains("format")) {
    if (!doc["format"].is_string()) throw ConfigError("format: expected a string");
    config.format = parse_format(doc["format"].get<std::string>());
  }
  if (doc.contains("schema_version")) {
    if (!doc["schema_version"].is_number_integer() || doc["schema_version"].get<int>() != kSchemaVersion) {
      throw ConfigError("schema_version: unsupported version");
    }
  }
  validate(config);
  return config;
}

json config_to_json(const ExperimentConfig& config) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["channel"] = config.channel;
  if (config.input) {
    json in = json::array();
    for (const Complex& c : *config.input) in.push_back({c.real(), c.imag()});
    doc["input"] = in;
  } else {
    doc["input"] = "random";
  }
  if (config.x) {
    doc["x"] = *config.x;
  } else {
    doc["x"] = "auto";
  }
  doc["trials"] = config.trials;
  doc["seed"] = config.seed;
  doc["output_path"] = config.output_path;
  doc["format"] = format_name(config.format);
  return doc;
}

void validate(const ExperimentConfig& config) {
  (void)channel_of(config);
  if (config.input) (void)input_of(config);
  if (config.x && (!std::isfinite(*config.x) || *config.x <= 0.0)) {
    throw ConfigError("x: must be a positive finite number or \"auto\"");
  }
  if (config.trials == 0) throw ConfigError("trials: must be at least 1");
}

ChannelParams channel_of(const ExperimentConfig& config) {
  const auto& c = config.channel;
  try {
    return ChannelParams(c[0], c[1], c[2], c[3]);
  } catch (const InvariantError& e) {
    throw ConfigError(std::string("channel: ") + e.what());
  }
}

InputState input_of(const ExperimentConfig& config) {
  if (!config.input) {
    Rng rng = Rng::for_stream(config.seed, kInputStream);
    return InputState::haar_random(rng);
  }
  const auto& c = *config.input;
  try {
    return InputState(c[0], c[1], c[2], c[3]);
  } catch (const InvariantError& e) {
    throw ConfigError(std::string("input: ") + e.what());
  }
}

}  // namespace qtele::cli
