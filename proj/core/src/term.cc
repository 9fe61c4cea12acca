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

#include "xoru/term.h"

#include <algorithm>

namespace xoru {

struct Term::Node {
  struct Xor {
    Term lhs;
    Term rhs;
  };
  template <typename T>
  explicit Node(T v) : value(std::move(v)) {}
  ~Node();

  std::variant<ConstantId, std::string, Xor> value;
};

// Unlinks uniquely owned subtrees onto a heap stack so that releasing a deep
// term does not recurse once per level.
Term::Node::~Node() {
  auto* x = std::get_if<Xor>(&value);
  if (x == nullptr) return;
  std::vector<std::shared_ptr<const Node>> pending;
  pending.push_back(std::move(x->lhs.node_));
  pending.push_back(std::move(x->rhs.node_));
  while (!pending.empty()) {
    std::shared_ptr<const Node> node = std::move(pending.back());
    pending.pop_back();
    if (!node || node.use_count() != 1) continue;
    auto& owned = const_cast<Node&>(*node);
    if (auto* child = std::get_if<Xor>(&owned.value)) {
      pending.push_back(std::move(child->lhs.node_));
      pending.push_back(std::move(child->rhs.node_));
    }
  }
}

Term::Term() : node_(zero_node()) {}

Term Term::constant(ConstantId id) {
  if (id == 0) return Term();
  return Term(std::make_shared<Node>(id));
}

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(std::make_shared<Node>(std::move(name)));
}

Term Term::xor_of(Term lhs, Term rhs) {
  return Term(std::make_shared<Node>(
      Node::Xor{std::move(lhs), std::move(rhs)}));
}

Term::Kind Term::kind() const {
  switch (node_->value.index()) {
    case 0:
      return Kind::kConstant;
    case 1:
      return Kind::kVariable;
    default:
      return Kind::kXor;
  }
}

ConstantId Term::constant_id() const {
  if (const auto* id = std::get_if<ConstantId>(&node_->value)) return *id;
  throw std::logic_error("Term::constant_id on a non-constant");
}

const std::string& Term::variable_name() const {
  if (const auto* name = std::get_if<std::string>(&node_->value)) return *name;
  throw std::logic_error("Term::variable_name on a non-variable");
}

const Term& Term::lhs() const {
  if (const auto* x = std::get_if<Node::Xor>(&node_->value)) return x->lhs;
  throw std::logic_error("Term::lhs on a non-XOR term");
}

const Term& Term::rhs() const {
  if (const auto* x = std::get_if<Node::Xor>(&node_->value)) return x->rhs;
  throw std::logic_error("Term::rhs on a non-XOR term");
}

bool operator==(const Term& a, const Term& b) {
  // Explicit stack: left-nested chains from long input lines can be deep.
  std::vector<std::pair<const Term*, const Term*>> pending{{&a, &b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->kind() != y->kind()) return false;
    switch (x->kind()) {
      case Term::Kind::kConstant:
        if (x->constant_id() != y->constant_id()) return false;
        break;
      case Term::Kind::kVariable:
        if (x->variable_name() != y->variable_name()) return false;
        break;
      case Term::Kind::kXor:
        pending.emplace_back(&x->lhs(), &y->lhs());
        pending.emplace_back(&x->rhs(), &y->rhs());
        break;
    }
  }
  return true;
}

const std::shared_ptr<const Term::Node>& Term::zero_node() {
  static const std::shared_ptr<const Node> node =
      std::make_shared<Node>(ConstantId{0});
  return node;
}

Atom Atom::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Atom(std::move(name));
}

std::optional<Atom> Atom::from_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::kConstant:
      return Atom::constant(t.constant_id());
    case Term::Kind::kVariable:
      return Atom::variable(t.variable_name());
    case Term::Kind::kXor:
      break;
  }
  return std::nullopt;
}

Term Atom::to_term() const {
  return is_constant() ? Term::constant(constant_id())
                       : Term::variable(variable_name());
}

std::strong_ordering atom_compare(const Atom& a, const Atom& b) {
  return a <=> b;
}

std::size_t leaf_count(const Term& t) {
  std::size_t count = 0;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_xor()) {
      stack.push_back(&cur->rhs());
      stack.push_back(&cur->lhs());
    } else {
      ++count;
    }
  }
  return count;
}

std::vector<std::string> variables_of(const Term& t) {
  std::vector<std::string> names;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_xor()) {
      stack.push_back(&cur->rhs());
      stack.push_back(&cur->lhs());
    } else if (cur->is_variable()) {
      names.push_back(cur->variable_name());
    }
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

ConstantId ConstantTable::intern(std::string_view name) {
  if (auto id = find(name)) return *id;
  names_.emplace_back(name);
  const ConstantId id = names_.size();
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<ConstantId> ConstantTable::find(std::string_view name) const {
  auto it = ids_.find(std::string(name));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::string ConstantTable::name_of(ConstantId id) const {
  if (id == 0) return "0";
  if (id <= names_.size()) return names_[id - 1];
  return "c" + std::to_string(id);
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string atom_text(const Term& t, const ConstantTable& constants) {
  return t.is_constant() ? constants.name_of(t.constant_id())
                         : t.variable_name();
}

void print_into(const Term& t, const ConstantTable& constants,
                std::string& out) {
  if (!t.is_xor()) {
    out += atom_text(t, constants);
    return;
  }
  // Walk down the left spine so long left-associated chains stay iterative.
  std::vector<const Term*> rights;
  const Term* cur = &t;
  while (cur->is_xor()) {
    rights.push_back(&cur->rhs());
    cur = &cur->lhs();
  }
  out += atom_text(*cur, constants);
  for (auto it = rights.rbegin(); it != rights.rend(); ++it) {
    out += " + ";
    if ((*it)->is_xor()) {
      out += '(';
      print_into(**it, constants, out);
      out += ')';
    } else {
      out += atom_text(**it, constants);
    }
  }
}

}  // namespace

std::string print_term(const Term& t, const ConstantTable& constants) {
  std::string out;
  print_into(t, constants, out);
  return out;
}

}  // namespace xoru
