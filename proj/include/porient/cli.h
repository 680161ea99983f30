// Copyright 2026 The porient Authors
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

#ifndef PORIENT_CLI_H_
#define PORIENT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace porient {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFormat = 1;        // unreadable or malformed input
inline constexpr int kExitPrecondition = 2;  // also: verify found a problem
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

// Runs the command line `args` (args[0] is the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace porient

#endif  // PORIENT_CLI_H_
