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

#include <functional>
#include <iosfwd>
#include <vector>

#include "revolve/methods.hpp"

namespace revolve {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitComputationError = 3,
  kExitDisagreement = 4,
};

struct CliHooks {
  /// Called by `compare` on the successful reports before the verdict is
  /// computed.
  std::function<void(std::vector<VolumeReport>&)> before_verdict;
};

/// Entry point of the `revolve` command line tool. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err, const CliHooks& hooks = {});

}  // namespace revolve
