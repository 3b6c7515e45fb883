// Copyright 2026 The brandt-aut Authors
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

#ifndef BRANDT_TOOLS_CLI_HPP_
#define BRANDT_TOOLS_CLI_HPP_

#include <ostream>

namespace brandt::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kParseError = 2;
inline constexpr int kInvalidInput = 3;
inline constexpr int kBudgetExceeded = 4;

// Runs one command; argv[0] is the program name.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace brandt::cli

#endif  // BRANDT_TOOLS_CLI_HPP_
