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

#include "xoru/normal_form.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace xoru {

NormalForm NormalForm::from_sorted(std::vector<Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].is_unit()) {
      throw std::invalid_argument("normal form may not contain the unit");
    }
    if (i > 0 && !(atoms[i - 1] < atoms[i])) {
      throw std::invalid_argument("normal form atoms must strictly ascend");
    }
  }
  NormalForm n;
  n.atoms_ = std::move(atoms);
  return n;
}

bool NormalForm::contains(const Atom& atom) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), atom);
}

bool NormalForm::contains_variable(const std::string& name) const {
  return contains(Atom::variable(name));
}

bool NormalForm::is_ground() const {
  // Variables sort last.
  return atoms_.empty() || atoms_.back().is_constant();
}

std::vector<std::string> NormalForm::variables() const {
  std::vector<std::string> names;
  for (const Atom& a : atoms_) {
    if (a.is_variable()) names.push_back(a.variable_name());
  }
  return names;
}

std::optional<Atom> NormalForm::least_variable() const {
  auto it = std::find_if(atoms_.begin(), atoms_.end(),
                         [](const Atom& a) { return a.is_variable(); });
  if (it == atoms_.end()) return std::nullopt;
  return *it;
}

LTerm term_to_lterm(const Term& t) {
  LTerm out;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_xor()) {
      stack.push_back(&cur->rhs());
      stack.push_back(&cur->lhs());
    } else {
      out.push_back(*Atom::from_term(*cur));
    }
  }
  return out;
}

Term lterm_to_term(std::span<const Atom> l) {
  if (l.empty()) return Term::zero();
  Term acc = l.front().to_term();
  for (const Atom& a : l.subspan(1)) acc = Term::xor_of(std::move(acc), a.to_term());
  return acc;
}

NormalForm reduce(LTerm l) {
  std::sort(l.begin(), l.end());
  std::vector<Atom> out;
  out.reserve(l.size());
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i + 1;
    while (j < l.size() && l[j] == l[i]) ++j;
    if ((j - i) % 2 == 1 && !l[i].is_unit()) out.push_back(std::move(l[i]));
    i = j;
  }
  return NormalForm(std::move(out));
}

NormalForm xor_sum(const NormalForm& a, const NormalForm& b) {
  std::vector<Atom> out;
  out.reserve(a.size() + b.size());
  auto x = a.atoms_.begin();
  auto y = b.atoms_.begin();
  while (x != a.atoms_.end() && y != b.atoms_.end()) {
    if (*x < *y) {
      out.push_back(*x++);
    } else if (*y < *x) {
      out.push_back(*y++);
    } else {
      ++x;
      ++y;
    }
  }
  out.insert(out.end(), x, a.atoms_.end());
  out.insert(out.end(), y, b.atoms_.end());
  return NormalForm(std::move(out));
}

bool equiv(const Term& t1, const Term& t2) {
  LTerm both = term_to_lterm(t1);
  LTerm rhs = term_to_lterm(t2);
  both.insert(both.end(), std::make_move_iterator(rhs.begin()),
              std::make_move_iterator(rhs.end()));
  return reduce(std::move(both)).empty();
}

std::vector<bool> parity_vector(const Term& t, std::span<const Atom> basis) {
  std::map<Atom, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!index.emplace(basis[i], i).second) {
      throw std::invalid_argument("parity basis contains a duplicate atom");
    }
  }
  std::vector<bool> bits(basis.size(), false);
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->is_xor()) {
      stack.push_back(&cur->lhs());
      stack.push_back(&cur->rhs());
      continue;
    }
    if (cur->is_zero()) continue;
    auto it = index.find(*Atom::from_term(*cur));
    if (it == index.end()) {
      throw std::invalid_argument("parity basis is missing an atom of the term");
    }
    bits[it->second] = !bits[it->second];
  }
  return bits;
}

std::string print_normal_form(const NormalForm& n,
                              const ConstantTable& constants) {
  if (n.empty()) return "0";
  std::string out;
  for (const Atom& a : n.atoms()) {
    if (!out.empty()) out += " + ";
    out += a.is_constant() ? constants.name_of(a.constant_id())
                           : a.variable_name();
  }
  return out;
}

}  // namespace xoru
