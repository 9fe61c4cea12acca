// Copyright 2026 The xoru Authors
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

// Subcommands of the `xoru` tool. Each returns the process exit status and
// writes only to the given streams.

#ifndef XORU_TOOLS_COMMANDS_H_
#define XORU_TOOLS_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "xoru/oracle.h"

namespace xoru::cli {

enum ExitCode : int {
  kExitOk = 0,            // solvable / equivalent / written
  kExitNegative = 1,      // unsatisfiable / not equivalent
  kExitInputError = 2,    // parse error, bad arguments, I/O failure
  kExitCheckFailure = 3,  // --check or --oracle disagreement, internal error
};

struct SolveFlags {
  bool json = false;
  bool check = false;
  bool oracle = false;
};

// `path` of "-" reads standard input.
int run_solve(const std::string& path, const SolveFlags& flags,
              std::ostream& out, std::ostream& err);

// Solves already-loaded problem text; `source` names it in error messages.
int run_solve_text(std::string_view text, std::string_view source,
                   const SolveFlags& flags, std::ostream& out,
                   std::ostream& err);

int run_normalize(std::string_view term_text, std::ostream& out,
                  std::ostream& err);

int run_equiv(std::string_view lhs_text, std::string_view rhs_text,
              std::ostream& out, std::ostream& err);

// `out_path` of "-" writes the problem to `out`; the seed line then goes to
// `err`.
int run_gen(const GeneratorParams& params, const std::string& out_path,
            std::ostream& out, std::ostream& err);

}  // namespace xoru::cli

#endif  // XORU_TOOLS_COMMANDS_H_
