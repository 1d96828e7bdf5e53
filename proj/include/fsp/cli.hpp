// Copyright 2026 The fsp Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fsp {

// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitFalse = 1,  // a boolean check came out false
    kExitUsage = 2,  // parse errors, unknown flags, unreadable input
    kExitGuard = 3,  // enumeration limit exceeded
};

// Runs one invocation. `args` excludes the program name. Programs named "-"
// are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fsp
