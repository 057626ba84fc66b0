// Copyright 2026 The ccround Authors.
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

#ifndef CCROUND_CLI_H_
#define CCROUND_CLI_H_

#include <ostream>

namespace ccround {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIneligible = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataFormat = 65;
inline constexpr int kExitNumerical = 70;

// Runs `ccround <command> ...` and returns its exit status. Reports and
// files named with -o are written to disk; everything else goes to out/err.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace ccround

#endif  // CCROUND_CLI_H_
