// Copyright 2026 The simonqp Authors
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

#ifndef SIMONQP_CLI_HPP
#define SIMONQP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace simonqp {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInvariant = 4;

/// Runs the command line `args` (without the program name). Reports go to
/// `out` as one JSON line each, summaries and errors to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace simonqp

#endif  // SIMONQP_CLI_HPP
