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

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "revolve/cli.hpp"

namespace revolve::test {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

inline CliRun run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  args.insert(args.begin(), "revolve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out,
                           err, hooks);
  return {code, out.str(), err.str()};
}

inline std::string fixture(const std::string& name) {
  return (std::filesystem::path(REVOLVE_FIXTURE_DIR) / name).string();
}

/// Writes `text` to a fresh file in the temp directory and returns its path.
inline std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("revolve_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

/// Drops every line that mentions wall_time (JSON) so runs can be compared.
inline std::string without_wall_time(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string kept;
  while (std::getline(in, line)) {
    if (line.find("wall_time") == std::string::npos) kept += line + "\n";
  }
  return kept;
}

}  // namespace revolve::test
