// Copyright 2026 The fockopt Authors
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

#ifndef FOCKOPT_TOOLS_CLI_APP_H
#define FOCKOPT_TOOLS_CLI_APP_H

#include <ostream>
#include <string>
#include <vector>

namespace fockopt::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kSemanticError = 2,
    kZeroProbability = 3,
    kOracleMismatch = 4,
};

/// Entry point behind the `fockopt` binary. `args` excludes the program
/// name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Expands "a:b:step" into an inclusive grid. Throws std::invalid_argument.
std::vector<double> parse_range(const std::string &spec);

}  // namespace fockopt::cli

#endif  // FOCKOPT_TOOLS_CLI_APP_H
