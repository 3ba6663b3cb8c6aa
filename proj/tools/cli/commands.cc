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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtele/bellcheck.h"
#include "qtele/errors.h"
#include "qtele/protocol.h"

namespace qtele::cli {
namespace {

using nlohmann::json;

json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

std::string csv_comment_header(const std::string& what) {
  return "# schema_version=" + std::to_string(kSchemaVersion) + "\n# qtele " + tool_version() +
         " " + what + "\n";
}

double parse_double(const std::string& text, const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(field + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ConfigError(field + ": '" + text + "' is not a finite number");
  }
  return v;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw std::ios_base::failure("failed writing '" + path + "'");
}

// Config flags shared by `teleport` and `scan`.
struct ConfigFlags {
  std::vector<double> channel;
  std::vector<std::string> input;
  std::string x;
  std::uint64_t trials = 0;
  CLI::Option* channel_opt = nullptr;
  CLI::Option* input_opt = nullptr;
  CLI::Option* x_opt = nullptr;
  CLI::Option* trials_opt = nullptr;

  void attach(CLI::App* sub) {
    channel_opt = sub->add_option("--channel", channel, "Channel coefficients alpha beta gamma delta")
                      ->expected(4);
    input_opt = sub->add_option("--input", input,
                                "\"random\", or a b c d as eight numbers re im re im ...")
                    ->expected(1, 8);
    x_opt = sub->add_option("--x", x, "POVM scaling x, or \"auto\" for the minimum");
    trials_opt = sub->add_option("--trials", trials, "Monte Carlo trial count");
  }
};

struct GlobalFlags {
  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;
  bool quiet = false;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* format_opt = nullptr;
};

struct ResolvedConfig {
  ExperimentConfig config;
  bool format_explicit = false;
};

ResolvedConfig resolve_config(const GlobalFlags& g, const ConfigFlags& f) {
  ResolvedConfig r;
  bool from_file_format = false;
  if (!g.config_path.empty()) {
    std::ifstream file(g.config_path);
    if (!file) throw ConfigError("config: cannot read '" + g.config_path + "'");
    json doc;
    try {
      doc = json::parse(file);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    r.config = config_from_json(doc);
    from_file_format = doc.contains("format");
  }
  ExperimentConfig& c = r.config;
  if (f.channel_opt && f.channel_opt->count()) {
    std::copy(f.channel.begin(), f.channel.end(), c.channel.begin());
  }
  if (f.input_opt && f.input_opt->count()) {
    if (f.input.size() == 1 && f.input[0] == "random") {
      c.input.reset();
    } else if (f.input.size() == 8) {
      std::array<Complex, 4> coeffs;
      for (std::size_t i = 0; i < 4; ++i) {
        std::string field = "input[" + std::to_string(i) + "]";
        coeffs[i] = Complex(parse_double(f.input[2 * i], field),
                            parse_double(f.input[2 * i + 1], field));
      }
      c.input = coeffs;
    } else {
      throw ConfigError("input: expected \"random\" or eight numbers");
    }
  }
  if (f.x_opt && f.x_opt->count()) {
    if (f.x == "auto") {
      c.x.reset();
    } else {
      c.x = parse_double(f.x, "x");
    }
  }
  if (f.trials_opt && f.trials_opt->count()) c.trials = f.trials;
  if (g.seed_opt->count()) c.seed = g.seed;
  if (g.out_opt->count()) c.output_path = g.out_path;
  if (g.format_opt->count()) c.format = parse_format(g.format);
  r.format_explicit = g.format_opt->count() > 0 || from_file_format;
  validate(c);
  return r;
}

}  // namespace

std::string tool_version() { return QTELE_VERSION; }

double round15(double v) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::string format15(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

json teleport_document(const ExperimentConfig& config) {
  validate(config);
  ChannelParams channel = channel_of(config);
  InputState input = input_of(config);
  RunStatistics stats = run_teleportation(input, channel, config.x, config.trials, config.seed);

  json resolved = json::array();
  for (const Complex& c : input.coefficients()) {
    resolved.push_back({round15(c.real()), round15(c.imag())});
  }
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = "qtele";
  doc["version"] = tool_version();
  doc["config"] = config_to_json(config);
  doc["resolved_input"] = resolved;
  doc["statistics"] = {
      {"trials", stats.trials},
      {"conclusive_count", stats.conclusive_count},
      {"conclusive_rate", number_or_null(stats.conclusive_rate)},
      {"mean_conclusive_fidelity", number_or_null(stats.mean_conclusive_fidelity)},
      {"min_conclusive_fidelity", number_or_null(stats.min_conclusive_fidelity)},
      {"exact_success_probability", number_or_null(stats.exact_success_probability)},
      {"x_used", number_or_null(stats.x_used)},
      {"min_x", number_or_null(min_x(channel))},
      {"seed", stats.seed},
  };
  return doc;
}

std::string render_teleport(const ExperimentConfig& config) {
  json doc = teleport_document(config);
  if (config.format == OutputFormat::kJson) return doc.dump(2) + "\n";
  const json& s = doc["statistics"];
  auto cell = [](const json& v) { return v.is_null() ? std::string("nan") : v.dump(); };
  std::ostringstream csv;
  csv << csv_comment_header("teleport");
  csv << "trials,conclusive_count,conclusive_rate,mean_conclusive_fidelity,"
         "min_conclusive_fidelity,exact_success_probability,x_used,min_x,seed\n";
  csv << cell(s["trials"]) << ',' << cell(s["conclusive_count"]) << ','
      << cell(s["conclusive_rate"]) << ',' << cell(s["mean_conclusive_fidelity"]) << ','
      << cell(s["min_conclusive_fidelity"]) << ',' << cell(s["exact_success_probability"]) << ','
      << cell(s["x_used"]) << ',' << cell(s["min_x"]) << ',' << cell(s["seed"]) << '\n';
  return csv.str();
}

MinXReport min_x_report(const ChannelParams& channel) {
  MinXReport report{channel.coefficients(), min_x(channel), {}};
  PovmSet povm = build_povm(channel, report.min_x);
  for (std::size_t m = 0; m < kNumPovmElements; ++m) {
    report.min_eigenvalues[m] = is_psd(povm.elements[m]).min_eigenvalue;
  }
  return report;
}

std::string render_min_x(const MinXReport& report, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["channel"] = report.channel;
    doc["min_x"] = round15(report.min_x);
    json eig = json::array();
    for (double v : report.min_eigenvalues) eig.push_back(round15(v));
    doc["min_eigenvalues"] = eig;
    return doc.dump(2) + "\n";
  }
  std::ostringstream text;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", report.min_x);
  text << "min_x = " << buf << "\n";
  for (std::size_t m = 0; m < report.min_eigenvalues.size(); ++m) {
    text << "min_eigenvalue[P" << m + 1 << "] = " << format15(report.min_eigenvalues[m]) << "\n";
  }
  return text.str();
}

std::array<double, 4> skew_channel(double t) {
  double c = std::cos(t);
  double s = std::sin(t);
  return {c * c, c * s, s * c, s * s};
}

std::vector<ScanRow> run_scan(const ExperimentConfig& config, const ScanSpec& spec) {
  if (spec.param != "x" && spec.param != "skew") {
    throw ConfigError("param: expected \"x\" or \"skew\", got \"" + spec.param + "\"");
  }
  if (spec.steps == 0) throw ConfigError("steps: must be at least 1");
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw ConfigError("start/stop: must be finite");
  }
  if (spec.param == "x" && (spec.start <= 0.0 || spec.stop <= 0.0)) {
    throw ConfigError("start/stop: x must be positive");
  }
  validate(config);
  InputState input = input_of(config);

  std::vector<ScanRow> rows;
  rows.reserve(spec.steps);
  for (std::uint64_t i = 0; i < spec.steps; ++i) {
    double v = spec.start;
    if (spec.steps > 1) {
      v = i + 1 == spec.steps
              ? spec.stop
              : spec.start + (spec.stop - spec.start) * static_cast<double>(i) /
                                 static_cast<double>(spec.steps - 1);
    }
    ExperimentConfig row_config = config;
    std::optional<double> x = config.x;
    if (spec.param == "x") {
      x = v;
    } else {
      row_config.channel = skew_channel(v);
    }
    ChannelParams channel = channel_of(row_config);
    RunStatistics stats = run_teleportation(input, channel, x, config.trials, config.seed);
    rows.push_back({v, stats.exact_success_probability, min_x(channel), stats.conclusive_rate,
                    stats.mean_conclusive_fidelity});
  }
  return rows;
}

std::string render_scan(const std::vector<ScanRow>& rows, const ScanSpec& spec,
                        OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["param"] = spec.param;
    json out = json::array();
    for (const ScanRow& r : rows) {
      out.push_back({{"param", number_or_null(r.param)},
                     {"exact_success_prob", number_or_null(r.exact_success_prob)},
                     {"min_x", number_or_null(r.min_x)},
                     {"conclusive_rate", number_or_null(r.conclusive_rate)},
                     {"mean_fidelity", number_or_null(r.mean_fidelity)}});
    }
    doc["rows"] = out;
    return doc.dump(2) + "\n";
  }
  std::ostringstream csv;
  csv << csv_comment_header("scan " + spec.param);
  csv << "param,exact_success_prob,min_x,conclusive_rate,mean_fidelity\n";
  for (const ScanRow& r : rows) {
    csv << format15(r.param) << ',' << format15(r.exact_success_prob) << ','
        << format15(r.min_x) << ',' << format15(r.conclusive_rate) << ','
        << format15(r.mean_fidelity) << '\n';
  }
  return csv.str();
}

ChshReport chsh_report(const std::array<double, 4>& angles, std::optional<std::uint64_t> trials,
                       std::uint64_t seed) {
  AnalyzerSetting a1(angles[0]), a2(angles[1]), b1(angles[2]), b2(angles[3]);
  ChshReport report{angles,
                    {singlet_correlation(a1, b1), singlet_correlation(a1, b2),
                     singlet_correlation(a2, b1), singlet_correlation(a2, b2)},
                    chsh_value(a1, a2, b1, b2),
                    trials};
  if (trials) {
    if (*trials == 0) throw ConfigError("trials: must be at least 1");
    Rng rng(seed);
    SampledChsh sampled = sample_chsh(a1, a2, b1, b2, *trials, rng);
    for (std::size_t i = 0; i < 4; ++i) {
      report.sampled[i] = sampled.correlations[i].mean;
      report.sampled_errors[i] = sampled.correlations[i].standard_error;
    }
    report.sampled_s = sampled.s;
    report.sampled_s_error = sampled.standard_error;
  }
  return report;
}

std::string render_chsh(const ChshReport& report, OutputFormat format) {
  static const std::array<const char*, 4> kPairs = {"a1,b1", "a1,b2", "a2,b1", "a2,b2"};
  if (format == OutputFormat::kJson) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["angles"] = report.angles;
    json e = json::object();
    for (std::size_t i = 0; i < 4; ++i) e[kPairs[i]] = round15(report.correlations[i]);
    doc["correlations"] = e;
    doc["S"] = round15(report.s);
    if (report.trials) {
      json sampled = json::object();
      for (std::size_t i = 0; i < 4; ++i) {
        sampled[kPairs[i]] = {{"mean", round15(report.sampled[i])},
                              {"standard_error", round15(report.sampled_errors[i])}};
      }
      doc["sampled"] = {{"trials", *report.trials},
                        {"correlations", sampled},
                        {"S", round15(report.sampled_s)},
                        {"S_standard_error", round15(report.sampled_s_error)}};
    }
    return doc.dump(2) + "\n";
  }
  std::ostringstream text;
  for (std::size_t i = 0; i < 4; ++i) {
    text << "E(" << kPairs[i] << ") = " << format15(report.correlations[i]) << "\n";
  }
  text << "S = " << format15(report.s) << "\n";
  if (report.trials) {
    text << "sampled over " << *report.trials << " trials per setting:\n";
    for (std::size_t i = 0; i < 4; ++i) {
      text << "E(" << kPairs[i] << ") = " << format15(report.sampled[i]) << " +- "
           << format15(report.sampled_errors[i]) << "\n";
    }
    text << "S = " << format15(report.sampled_s) << " +- " << format15(report.sampled_s_error)
         << "\n";
  }
  return text.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact state-vector simulation of two-qubit teleportation through a "
               "four-particle partially entangled channel.",
               "qtele"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--config", g.config_path, "JSON experiment config (flags override it)");
  g.seed_opt = app.add_option("--seed", g.seed, "Random seed (unsigned 64-bit)");
  g.out_path = "";
  g.out_opt = app.add_option("--out", g.out_path, "Write the result here instead of stdout");
  g.format_opt = app.add_option("--format", g.format, "Output format: json or csv")
                     ->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--quiet", g.quiet, "Suppress informational messages on stderr");

  CLI::App* teleport = app.add_subcommand("teleport", "Run the teleportation protocol");
  ConfigFlags teleport_flags;
  teleport_flags.attach(teleport);

  CLI::App* scan = app.add_subcommand("scan", "Scan x or the channel skew parameter");
  ConfigFlags scan_flags;
  scan_flags.attach(scan);
  ScanSpec spec;
  scan->add_option("--param", spec.param, "x or skew")->required();
  scan->add_option("--start", spec.start)->required();
  scan->add_option("--stop", spec.stop)->required();
  scan->add_option("--steps", spec.steps)->required();

  CLI::App* minx = app.add_subcommand("min-x", "Minimal admissible POVM scaling for a channel");
  std::vector<double> minx_channel;
  minx->add_option("channel", minx_channel, "alpha beta gamma delta")->expected(4)->required();

  CLI::App* chsh = app.add_subcommand("chsh", "Singlet correlations and the CHSH value");
  std::vector<double> angles;
  std::uint64_t chsh_trials = 0;
  chsh->add_option("angles", angles, "a1 a2 b1 b2 in radians")->expected(4)->required();
  CLI::Option* chsh_trials_opt =
      chsh->add_option("--trials", chsh_trials, "Also estimate by sampling");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  auto info = [&](const std::string& msg) {
    if (!g.quiet) err << msg << "\n";
  };

  try {
    if (teleport->parsed()) {
      ResolvedConfig r = resolve_config(g, teleport_flags);
      emit(render_teleport(r.config), r.config.output_path, out);
      if (!r.config.output_path.empty()) info("wrote " + r.config.output_path);
    } else if (scan->parsed()) {
      ResolvedConfig r = resolve_config(g, scan_flags);
      OutputFormat format = r.format_explicit ? r.config.format : OutputFormat::kCsv;
      emit(render_scan(run_scan(r.config, spec), spec, format), r.config.output_path, out);
      if (!r.config.output_path.empty()) info("wrote " + r.config.output_path);
    } else if (minx->parsed()) {
      ChannelParams channel(minx_channel[0], minx_channel[1], minx_channel[2], minx_channel[3]);
      OutputFormat format = g.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      emit(render_min_x(min_x_report(channel), format), g.out_path, out);
    } else if (chsh->parsed()) {
      std::optional<std::uint64_t> trials;
      if (chsh_trials_opt->count()) trials = chsh_trials;
      OutputFormat format = g.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
      std::array<double, 4> a = {angles[0], angles[1], angles[2], angles[3]};
      emit(render_chsh(chsh_report(a, trials, g.seed), format), g.out_path, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvariantError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const PositivityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace qtele::cli
