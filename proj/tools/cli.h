// Copyright 2026 The secvne Authors.
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

#ifndef SECVNE_TOOLS_CLI_H_
#define SECVNE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace secvne::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitBudget = 3;
// compare found a dominance violation.
inline constexpr int kExitDominance = 4;

// args[0] is the program name. Results go to `out` (or --out), diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secvne::cli

#endif  // SECVNE_TOOLS_CLI_H_
