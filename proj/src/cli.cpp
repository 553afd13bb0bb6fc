// Copyright 2026 The Revolve Authors.
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

#include "revolve/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "revolve/config.hpp"
#include "revolve/errors.hpp"
#include "revolve/report.hpp"

namespace revolve {

namespace {

using nlohmann::json;

struct Flags {
  std::string config;
  std::optional<std::string> method;
  std::optional<double> rel_tol;
  std::optional<double> abs_tol;
  std::optional<std::uint64_t> mc_samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  bool print_normalized = false;
  int grid = 32;
};

void apply_overrides(JobConfig& job, const Flags& flags) {
  std::vector<std::string> problems;
  if (flags.method) {
    if (*flags.method == "all") {
      job.method = {true, Method::DoubleIntegral};
    } else if (auto m = parse_method(*flags.method)) {
      job.method = {false, *m};
    } else {
      problems.push_back("--method: unknown method '" + *flags.method + "'");
    }
  }
  if (flags.rel_tol) {
    if (*flags.rel_tol > 0.0) {
      job.tolerance.rel = *flags.rel_tol;
    } else {
      problems.push_back("--rel-tol: must be > 0");
    }
  }
  if (flags.abs_tol) {
    if (*flags.abs_tol > 0.0) {
      job.tolerance.abs = *flags.abs_tol;
    } else {
      problems.push_back("--abs-tol: must be > 0");
    }
  }
  if (flags.mc_samples) {
    if (*flags.mc_samples >= 100) {
      job.monte_carlo.samples = *flags.mc_samples;
    } else {
      problems.push_back("--mc-samples: must be >= 100");
    }
  }
  if (flags.seed) job.monte_carlo.seed = *flags.seed;
  if (flags.format) {
    if (auto f = parse_format(*flags.format)) {
      job.format = *f;
    } else {
      problems.push_back("--format: expected json or csv");
    }
  }
  if (!problems.empty()) throw ConfigError(problems);
}

const Axis& require_axis(const JobConfig& job, const std::string& command) {
  if (!job.axis) {
    throw ConfigError({"axis: required by the " + command + " command"});
  }
  return *job.axis;
}

void emit(std::ostream& out, const JobConfig& job, const json& document,
          const CsvTable& table) {
  if (job.format == OutputFormat::Csv) {
    out << table.str();
  } else {
    out << document.dump(2) << "\n";
  }
}

int run_volume(const JobConfig& job, std::ostream& out) {
  const Axis& axis = require_axis(job, "volume");
  if (job.method.all) {
    Comparison all = compare_methods(job.region, axis, job.tolerance,
                                     job.monte_carlo);
    json reports = json::array();
    bool any = false;
    for (const MethodOutcome& outcome : all.outcomes) {
      reports.push_back(to_json(outcome));
      any = any || outcome.report.has_value();
    }
    CsvTable table = to_csv(all);
    table.header.erase(table.header.begin());
    table.rows.front().erase(table.rows.front().begin());
    emit(out, job, {{"command", "volume"}, {"reports", reports}}, table);
    return any ? kExitOk : kExitComputationError;
  }
  const VolumeReport report = compute_volume(
      job.method.method, job.region, axis, job.tolerance, job.monte_carlo);
  json document = to_json(report);
  document["command"] = "volume";
  emit(out, job, document, to_csv(report));
  return kExitOk;
}

int run_compare(const JobConfig& job, std::ostream& out, std::ostream& err,
                const CliHooks& hooks) {
  const Axis& axis = require_axis(job, "compare");
  Comparison comparison =
      compare_methods(job.region, axis, job.tolerance, job.monte_carlo);
  if (hooks.before_verdict) {
    std::vector<VolumeReport> reports;
    for (const auto& outcome : comparison.outcomes) {
      if (outcome.report) reports.push_back(*outcome.report);
    }
    hooks.before_verdict(reports);
    std::size_t next = 0;
    for (auto& outcome : comparison.outcomes) {
      if (outcome.report) outcome.report = reports[next++];
    }
    comparison.verdict = assess_agreement(reports);
  }
  json document = to_json(comparison);
  document["command"] = "compare";
  emit(out, job, document, to_csv(comparison));
  switch (comparison.verdict) {
    case Verdict::Agree:
      return kExitOk;
    case Verdict::Disagree:
      err << "methods disagree beyond their error estimates\n";
      return kExitDisagreement;
    case Verdict::NoData:
      err << "no method produced a volume\n";
      return kExitComputationError;
  }
  return kExitComputationError;
}

int run_centroid(const JobConfig& job, std::ostream& out) {
  const CentroidReport report = centroid(job.region, job.tolerance);
  json document = to_json(report);
  document["command"] = "centroid";
  emit(out, job, document, to_csv(report));
  return kExitOk;
}

int run_check(const JobConfig& job, std::ostream& out) {
  const int side = axis_side_check(job.region, require_axis(job, "check"));
  emit(out, job, {{"command", "check"}, {"side", side}},
       CsvTable{{"side"}, {{std::to_string(side)}}});
  return kExitOk;
}

int run_sample(const JobConfig& job, int grid, std::ostream& out) {
  const Axis& axis = require_axis(job, "sample");
  if (grid < 1) throw ConfigError({"--grid: must be >= 1"});
  const Box box = bounding_box(job.region);
  const Point size = box.sizes();
  CsvTable table{{"x", "y", "inside", "distance"}, {}};
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      const Point p = box.min() + Point((i + 0.5) / grid * size.x(),
                                        (j + 0.5) / grid * size.y());
      table.rows.push_back({format_number(p.x()), format_number(p.y()),
                            contains(job.region, p) ? "1" : "0",
                            format_number(std::abs(signed_distance(axis, p)))});
    }
  }
  out << table.str();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err, const CliHooks& hooks) {
  CLI::App app{"Volumes of solids of revolution about an arbitrary axis"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", flags.config, "Job config (JSON)")->required();
    cmd->add_option("--method", flags.method,
                    "double_integral|disk|shell|polar|pappus|monte_carlo|all");
    cmd->add_option("--rel-tol", flags.rel_tol, "Relative tolerance");
    cmd->add_option("--abs-tol", flags.abs_tol, "Absolute tolerance");
    cmd->add_option("--mc-samples", flags.mc_samples, "Monte Carlo samples");
    cmd->add_option("--seed", flags.seed, "Monte Carlo seed");
    cmd->add_option("--format", flags.format, "json|csv");
    cmd->add_flag("--print-normalized", flags.print_normalized,
                  "Print the normalized config and exit");
  };

  CLI::App* volume = app.add_subcommand("volume", "Volume by one method");
  CLI::App* compare =
      app.add_subcommand("compare", "Run every applicable method and compare");
  CLI::App* centroid_cmd =
      app.add_subcommand("centroid", "Area and centroid of the region");
  CLI::App* sample = app.add_subcommand(
      "sample", "Grid of x,y,inside,distance rows over the bounding box (CSV)");
  CLI::App* check =
      app.add_subcommand("check", "Which side of the axis the region lies on");
  for (CLI::App* cmd : {volume, compare, centroid_cmd, sample, check}) {
    add_common(cmd);
  }
  sample->add_option("--grid", flags.grid, "Grid points per side")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    JobConfig job = load_job(flags.config);
    apply_overrides(job, flags);
    if (flags.print_normalized) {
      out << to_json(job).dump(2) << "\n";
      return kExitOk;
    }
    if (volume->parsed()) return run_volume(job, out);
    if (compare->parsed()) return run_compare(job, out, err, hooks);
    if (centroid_cmd->parsed()) return run_centroid(job, out);
    if (sample->parsed()) return run_sample(job, flags.grid, out);
    return run_check(job, out);
  } catch (const ConfigError& e) {
    err << "config error:\n" << e.what() << "\n";
    return kExitConfigError;
  } catch (const Error& e) {
    err << e.kind() << ": " << e.what() << "\n";
    return kExitComputationError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

}  // namespace revolve
