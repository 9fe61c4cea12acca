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

// Flat list representation of XOR-sums and its canonical form.
//
// An LTerm is a sequence of atoms read as their XOR; it may hold duplicates
// and the unit. Reducing an LTerm drops units, cancels atoms that occur an
// even number of times and sorts what is left. Two terms are equivalent
// modulo XOR exactly when their reduced forms are identical sequences, so
// equivalence is decided by a syntactic comparison.

#ifndef XORU_NORMAL_FORM_H_
#define XORU_NORMAL_FORM_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xoru/term.h"

namespace xoru {

using LTerm = std::vector<Atom>;

// Strictly ascending, unit-free sequence of atoms. Empty means 0.
class NormalForm {
 public:
  NormalForm() = default;

  // Throws std::invalid_argument unless `atoms` is strictly ascending and
  // unit-free.
  static NormalForm from_sorted(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  bool contains(const Atom& atom) const;
  bool contains_variable(const std::string& name) const;
  bool is_ground() const;
  std::vector<std::string> variables() const;
  // Least variable atom; nullopt if ground.
  std::optional<Atom> least_variable() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  explicit NormalForm(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  friend NormalForm reduce(LTerm l);
  friend NormalForm xor_sum(const NormalForm& a, const NormalForm& b);

  std::vector<Atom> atoms_;
};

// In-order leaves of the XOR tree. Units are kept; never empty.
LTerm term_to_lterm(const Term& t);

// [] -> 0, [a] -> a, otherwise the left-associated XOR in sequence order.
Term lterm_to_term(std::span<const Atom> l);
inline Term to_term(const NormalForm& n) { return lterm_to_term(n.atoms()); }

// Canonical form: units dropped, pairs cancelled, sorted by atom_compare.
NormalForm reduce(LTerm l);

inline NormalForm normalize(const Term& t) { return reduce(term_to_lterm(t)); }

// reduce(a ++ b) computed by a linear merge.
NormalForm xor_sum(const NormalForm& a, const NormalForm& b);

// t1 and t2 are equal modulo XOR iff t1 + t2 reduces to 0.
bool equiv(const Term& t1, const Term& t2);

// Bit i is the parity of basis[i] among the leaves of `t`, counted directly
// on the tree. Units are ignored. Throws std::invalid_argument if the basis
// has duplicates or misses a non-unit atom of `t`.
std::vector<bool> parity_vector(const Term& t, std::span<const Atom> basis);

// "0" for the empty form, otherwise the atoms joined with " + ".
std::string print_normal_form(const NormalForm& n,
                              const ConstantTable& constants);

}  // namespace xoru

#endif  // XORU_NORMAL_FORM_H_
