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

#include "xoru/substitution.h"

#include <stdexcept>

namespace xoru {

void Substitution::bind(std::string var, NormalForm value) {
  if (var.empty()) throw std::invalid_argument("empty variable name");
  const auto atoms = value.atoms();
  if (atoms.size() == 1 && atoms[0].is_variable() &&
      atoms[0].variable_name() == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(std::move(var), std::move(value));
}

const NormalForm* Substitution::find(std::string_view var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::set<std::string> Substitution::domain() const {
  std::set<std::string> out;
  for (const auto& [var, value] : bindings_) out.insert(var);
  return out;
}

std::set<std::string> Substitution::range_variables() const {
  std::set<std::string> out;
  for (const auto& [var, value] : bindings_) {
    for (auto& name : value.variables()) out.insert(std::move(name));
  }
  return out;
}

NormalForm apply(const Substitution& s, const NormalForm& n) {
  if (s.empty()) return n;
  LTerm spliced;
  spliced.reserve(n.size());
  for (const Atom& a : n.atoms()) {
    const NormalForm* value =
        a.is_variable() ? s.find(a.variable_name()) : nullptr;
    if (value == nullptr) {
      spliced.push_back(a);
    } else {
      spliced.insert(spliced.end(), value->atoms().begin(),
                     value->atoms().end());
    }
  }
  return reduce(std::move(spliced));
}

Term apply(const Substitution& s, const Term& t) {
  return to_term(apply(s, normalize(t)));
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [var, value] : inner.bindings()) {
    out.bind(var, apply(outer, value));
  }
  for (const auto& [var, value] : outer.bindings()) {
    if (inner.find(var) == nullptr) out.bind(var, value);
  }
  return out;
}

bool is_idempotent(const Substitution& s) {
  for (const auto& [var, value] : s.bindings()) {
    if (apply(s, value) != value) return false;
  }
  return true;
}

bool has_disjoint_domain_and_range(const Substitution& s) {
  for (const auto& [var, value] : s.bindings()) {
    for (const Atom& a : value.atoms()) {
      if (a.is_variable() && s.find(a.variable_name()) != nullptr) {
        return false;
      }
    }
  }
  return true;
}

std::string print_substitution(const Substitution& s,
                               const ConstantTable& constants) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& [var, value] : s.bindings()) {
    if (!out.empty()) out += '\n';
    out += var;
    out += " := ";
    out += print_normal_form(value, constants);
  }
  return out;
}

}  // namespace xoru
