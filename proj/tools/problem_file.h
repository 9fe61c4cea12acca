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

// Problem files: one `term = term` equation per line, '#' comments, blank
// lines ignored. All lines share one constant table.

#ifndef XORU_TOOLS_PROBLEM_FILE_H_
#define XORU_TOOLS_PROBLEM_FILE_H_

#include <string>
#include <string_view>

#include "xoru/term.h"
#include "xoru/unify.h"

namespace xoru::cli {

struct ProblemFile {
  ProblemSet problems;
  ConstantTable constants;
};

// Throws ParseError carrying the file line and column.
ProblemFile parse_problem_file(std::string_view text);

// Inverse of parse_problem_file up to constant renumbering. `header` lines
// are emitted as comments first.
std::string format_problem_file(const ProblemSet& ps,
                                const ConstantTable& constants,
                                std::string_view header = {});

}  // namespace xoru::cli

#endif  // XORU_TOOLS_PROBLEM_FILE_H_
