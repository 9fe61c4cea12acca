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

#include "problem_file.h"

namespace xoru::cli {

ProblemFile parse_problem_file(std::string_view text) {
  ProblemFile file;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line)) continue;
    auto [lhs, rhs] = parse_equation(line, file.constants, line_no);
    file.problems.emplace_back(std::move(lhs), std::move(rhs));
  }
  return file;
}

std::string format_problem_file(const ProblemSet& ps,
                                const ConstantTable& constants,
                                std::string_view header) {
  std::string out;
  while (!header.empty()) {
    const std::size_t eol = header.find('\n');
    out += "# ";
    out += header.substr(0, eol);
    out += '\n';
    header = eol == std::string_view::npos ? std::string_view{}
                                           : header.substr(eol + 1);
  }
  for (const Equation& eq : ps) {
    out += print_term(eq.lhs(), constants);
    out += " = ";
    out += print_term(eq.rhs(), constants);
    out += '\n';
  }
  return out;
}

}  // namespace xoru::cli
