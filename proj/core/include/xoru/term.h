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

// Term syntax for the exclusive-or theory: constants, variables and binary
// XOR nodes. Constant 0 is the unit of XOR.

#ifndef XORU_TERM_H_
#define XORU_TERM_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace xoru {

using ConstantId = std::uint64_t;

// Immutable binary-tree term. Copies share structure and are cheap.
class Term {
 public:
  enum class Kind { kConstant, kVariable, kXor };

  // The unit, constant 0.
  Term();

  static Term zero() { return Term(); }
  static Term constant(ConstantId id);
  // Throws std::invalid_argument if `name` is empty.
  static Term variable(std::string name);
  static Term xor_of(Term lhs, Term rhs);

  Kind kind() const;
  bool is_constant() const { return kind() == Kind::kConstant; }
  bool is_variable() const { return kind() == Kind::kVariable; }
  bool is_xor() const { return kind() == Kind::kXor; }
  bool is_zero() const { return is_constant() && constant_id() == 0; }

  // Accessors below throw std::logic_error on the wrong kind.
  ConstantId constant_id() const;
  const std::string& variable_name() const;
  const Term& lhs() const;
  const Term& rhs() const;

  // Structural equality. Distinct constructors are never equal.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static const std::shared_ptr<const Node>& zero_node();

  std::shared_ptr<const Node> node_;
};

// A leaf of a term: a constant (including the unit while an LTerm is being
// built) or a variable.
//
// Ordering: every constant precedes every variable, constants by id, variables
// lexicographically by name.
class Atom {
 public:
  static Atom constant(ConstantId id) { return Atom(id); }
  // Throws std::invalid_argument if `name` is empty.
  static Atom variable(std::string name);
  static Atom unit() { return Atom(ConstantId{0}); }

  // Returns nullopt for XOR nodes.
  static std::optional<Atom> from_term(const Term& t);

  bool is_constant() const { return value_.index() == 0; }
  bool is_variable() const { return value_.index() == 1; }
  bool is_unit() const { return is_constant() && constant_id() == 0; }

  ConstantId constant_id() const { return std::get<0>(value_); }
  const std::string& variable_name() const { return std::get<1>(value_); }

  Term to_term() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;

 private:
  explicit Atom(ConstantId id) : value_(id) {}
  explicit Atom(std::string name) : value_(std::move(name)) {}

  std::variant<ConstantId, std::string> value_;
};

std::strong_ordering atom_compare(const Atom& a, const Atom& b);

// Number of non-XOR leaves.
std::size_t leaf_count(const Term& t);

// Variable names occurring in `t`, sorted and deduplicated.
std::vector<std::string> variables_of(const Term& t);

// Maps constant names to ids within one parse session. Ids are handed out in
// first-occurrence order starting at 1; id 0 is always the unit.
class ConstantTable {
 public:
  // Returns the id for `name`, assigning the next free id on first sight.
  ConstantId intern(std::string_view name);
  std::optional<ConstantId> find(std::string_view name) const;
  // "0" for the unit, the interned name if any, otherwise "c<id>".
  std::string name_of(ConstantId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;  // names_[id - 1]
  std::unordered_map<std::string, ConstantId> ids_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  // 1-based.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Grammar (whitespace insignificant, '#' starts a line comment):
//
//   term := atom | term '+' term | '(' term ')'
//   atom := '0' | lowercase-ident | uppercase-ident
//
// Lowercase identifiers are constants, uppercase identifiers are variables,
// and '+' is left-associative.
Term parse_term(std::string_view text, ConstantTable& constants);

// Parses `term = term`. Error positions are reported relative to `text`,
// with line numbers offset by `first_line - 1`.
std::pair<Term, Term> parse_equation(std::string_view text,
                                     ConstantTable& constants,
                                     std::size_t first_line = 1);

// True if `text` holds nothing but whitespace and comments.
bool is_blank(std::string_view text);

bool is_variable_identifier(std::string_view name);
bool is_constant_identifier(std::string_view name);

// Renders with '+' and the minimum parentheses needed for
// parse_term(print_term(t)) to reproduce `t` exactly under the same table.
std::string print_term(const Term& t, const ConstantTable& constants);

}  // namespace xoru

#endif  // XORU_TERM_H_
