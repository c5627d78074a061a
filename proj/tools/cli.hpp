// Copyright 2026 The mbd Authors
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

#ifndef MBD_TOOLS_CLI_HPP_
#define MBD_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mbd::cli {

enum ExitStatus : int {
  kSuccess = 0,     // at least one diagnosis, or the check passed
  kNoResult = 1,    // no diagnosis, or the check failed
  kUsageError = 2,  // bad arguments or unreadable/invalid input
};

/// Runs `mbd` with `args` (program name excluded). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mbd::cli

#endif  // MBD_TOOLS_CLI_HPP_
