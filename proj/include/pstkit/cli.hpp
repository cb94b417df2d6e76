// Copyright 2026 The pstkit Authors
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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pstkit/graph.hpp"

namespace pstkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,           // analysis completed, including a definite "no"
  kExitUsage = 1,        // bad arguments or unparsable input
  kExitUnsupported = 2,  // spectrum outside the exact machinery, or internal error
};

/// Graph expressions: "family:k", "cartesian(a,b)", "tensor(a,b)",
/// "complement(a)", "power(a,k)" (Cartesian power) and "g6:<graph6>".
/// Families are path, cycle, complete, star, empty and hypercube. The result
/// is named by the canonical form of the expression.
Graph parse_graph_expression(std::string_view text);

/// Oracle tolerance: PSTKIT_TOL when set to a positive number, else 1e-9.
double oracle_tolerance();

/// Runs one command line (without the program name). JSON goes to `out`,
/// one document per line; a short human summary goes to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pstkit
