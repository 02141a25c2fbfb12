// Copyright 2026 The rep132 Authors
//
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

// The rep132 command line, callable in-process so that tests can drive it.

#ifndef REP132_TOOLS_CLI_H_
#define REP132_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "rep132/search.h"

namespace rep132::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;       // bad input, I/O failure
inline constexpr int kExitUsage = 2;       // bad flags
inline constexpr int kExitNotRepresentable = 3;
inline constexpr int kExitBudgetExceeded = 4;

// kExitOk, kExitNotRepresentable or kExitBudgetExceeded.
int ExitCode(Outcome outcome);

// Default worker count: $REP132_WORKERS if set to a positive integer, else 1.
int DefaultWorkers();

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rep132::cli

#endif  // REP132_TOOLS_CLI_H_
