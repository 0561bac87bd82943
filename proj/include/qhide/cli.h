// Copyright 2026 The qhide Authors
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

#ifndef QHIDE_CLI_H
#define QHIDE_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace qhide {

/// Process exit codes of the qhide tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitInternal = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qhide

#endif  // QHIDE_CLI_H
