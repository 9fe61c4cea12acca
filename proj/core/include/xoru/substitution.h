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

#ifndef XORU_SUBSTITUTION_H_
#define XORU_SUBSTITUTION_H_

#include <functional>
#include <map>
#include <set>
#include <string>

#include "xoru/normal_form.h"
#include "xoru/term.h"

namespace xoru {

// Finite map from variable names to reduced terms. Bindings of a variable to
// itself are never stored, so two substitutions are equal iff they act the
// same on every variable.
class Substitution {
 public:
  using Bindings = std::map<std::string, NormalForm, std::less<>>;

  Substitution() = default;

  // Adds or replaces the binding for `var`. Binding `var` to itself removes
  // it. Throws std::invalid_argument on an empty name.
  void bind(std::string var, NormalForm value);

  // nullptr when `var` is unbound.
  const NormalForm* find(std::string_view var) const;

  const Bindings& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }

  std::set<std::string> domain() const;
  std::set<std::string> range_variables() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Bindings bindings_;
};

// Replaces every bound variable atom of `n` by its binding and re-reduces.
NormalForm apply(const Substitution& s, const NormalForm& n);

// apply() lifted through the list representation; the result is the
// left-associated rendering of the reduced image.
Term apply(const Substitution& s, const Term& t);

// The substitution acting as `outer` after `inner`.
Substitution compose(const Substitution& outer, const Substitution& inner);

// s(s(v)) == s(v) for every bound v; i.e. s o s == s.
bool is_idempotent(const Substitution& s);

// No bound variable occurs in any binding's value (solved form). Implies
// is_idempotent(); the converse does not hold modulo XOR, e.g.
// {X := Y + Z, Y := X + Z, Z := X + Y}.
bool has_disjoint_domain_and_range(const Substitution& s);

// One `Var := term` line per binding, sorted by variable; "{}" if empty.
std::string print_substitution(const Substitution& s,
                               const ConstantTable& constants);

}  // namespace xoru

#endif  // XORU_SUBSTITUTION_H_
