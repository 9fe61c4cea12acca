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

#include <gtest/gtest.h>

#include "test_support.h"

namespace xoru {
namespace {

using testing::RandomTerms;
using testing::TermShape;

Term X() { return Term::variable("X"); }
Term K(ConstantId id) { return Term::constant(id); }

TEST(TermTest, UnitIsConstantZero) {
  EXPECT_TRUE(Term::zero().is_zero());
  EXPECT_EQ(Term::zero(), Term::constant(0));
  EXPECT_EQ(Term(), Term::zero());
  EXPECT_FALSE(K(1).is_zero());
}

TEST(TermTest, DistinctConstructorsAreDisequal) {
  EXPECT_NE(K(1), X());
  EXPECT_NE(K(1), K(2));
  EXPECT_NE(Term::xor_of(K(1), K(2)), Term::xor_of(K(2), K(1)));
  EXPECT_EQ(Term::xor_of(K(1), X()), Term::xor_of(K(1), X()));
}

TEST(TermTest, AccessorsRejectWrongKind) {
  EXPECT_THROW(X().constant_id(), std::logic_error);
  EXPECT_THROW(K(3).variable_name(), std::logic_error);
  EXPECT_THROW(K(3).lhs(), std::logic_error);
  EXPECT_THROW(Term::variable(""), std::invalid_argument);
}

TEST(TermTest, LeafCountAndVariables) {
  const Term t = Term::xor_of(Term::xor_of(X(), K(1)), Term::xor_of(X(), Term::variable("A")));
  EXPECT_EQ(leaf_count(t), 4u);
  EXPECT_EQ(variables_of(t), (std::vector<std::string>{"A", "X"}));
}

TEST(AtomCompareTest, Examples) {
  EXPECT_EQ(atom_compare(Atom::constant(1), Atom::constant(2)),
            std::strong_ordering::less);
  EXPECT_EQ(atom_compare(Atom::constant(9), Atom::variable("A")),
            std::strong_ordering::less);
  EXPECT_EQ(atom_compare(Atom::variable("X"), Atom::variable("X")),
            std::strong_ordering::equal);
  EXPECT_EQ(atom_compare(Atom::variable("Y"), Atom::variable("X")),
            std::strong_ordering::greater);
}

TEST(AtomCompareTest, StrictTotalOrderOnSampledTriples) {
  RandomTerms gen(17);
  TermShape shape{.max_depth = 1, .num_consts = 10, .num_vars = 6};
  for (int i = 0; i < 5000; ++i) {
    const Atom a = gen.atom(shape), b = gen.atom(shape), c = gen.atom(shape);
    const auto ab = atom_compare(a, b);
    EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
    EXPECT_EQ(atom_compare(b, a), 0 <=> ab);  // antisymmetry
    if (ab < 0 && atom_compare(b, c) < 0) {
      EXPECT_TRUE(atom_compare(a, c) < 0) << "transitivity";
    }
  }
}

TEST(ParseTermTest, UnitLiteral) {
  ConstantTable table;
  EXPECT_EQ(parse_term("0", table), Term::zero());
  EXPECT_EQ(table.size(), 0u);
}

TEST(ParseTermTest, GrammarAndConstantNumbering) {
  ConstantTable table;
  const Term t = parse_term("X + a + (b + c)", table);
  const Term expected =
      Term::xor_of(Term::xor_of(X(), K(1)), Term::xor_of(K(2), K(3)));
  EXPECT_EQ(t, expected);
  EXPECT_EQ(table.name_of(1), "a");
  EXPECT_EQ(table.name_of(3), "c");
}

TEST(ParseTermTest, SessionReusesIds) {
  ConstantTable table;
  parse_term("b + a", table);
  EXPECT_EQ(parse_term("a", table), K(2));
  EXPECT_EQ(parse_term("d", table), K(3));
}

TEST(ParseTermTest, PlusIsLeftAssociative) {
  ConstantTable table;
  EXPECT_EQ(parse_term("a + b + c", table),
            Term::xor_of(Term::xor_of(K(1), K(2)), K(3)));
}

TEST(ParseTermTest, WhitespaceAndComments) {
  ConstantTable table;
  EXPECT_EQ(parse_term("  X+a # trailing comment\n", table),
            Term::xor_of(X(), K(1)));
  EXPECT_EQ(parse_term("(\n  X # first\n  + a)", table),
            Term::xor_of(X(), K(1)));
}

TEST(ParseTermTest, SyntaxErrorsCarryPositions) {
  ConstantTable table;
  try {
    parse_term("X + + a", table);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 5u);
  }
  try {
    parse_term("X +\n  )", table);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseTermTest, RejectsMalformedInput) {
  ConstantTable table;
  for (const char* bad : {"", "   ", "X +", "(X + a", "X + a)", "1", "01",
                          "X $ a", "_x", "X a", "X = a", "()"}) {
    EXPECT_THROW(parse_term(bad, table), ParseError) << bad;
  }
}

TEST(ParseEquationTest, SplitsAtEquals) {
  ConstantTable table;
  auto [lhs, rhs] = parse_equation("X + a = b", table);
  EXPECT_EQ(lhs, Term::xor_of(X(), K(1)));
  EXPECT_EQ(rhs, K(2));
  EXPECT_THROW(parse_equation("X = a = b", table), ParseError);
  EXPECT_THROW(parse_equation("X + a", table), ParseError);
  try {
    parse_equation("X = +", table, 7);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(IdentifierTest, Classes) {
  EXPECT_TRUE(is_variable_identifier("X1_b"));
  EXPECT_FALSE(is_variable_identifier("x"));
  EXPECT_TRUE(is_constant_identifier("nonce_2"));
  EXPECT_FALSE(is_constant_identifier("0"));
  EXPECT_TRUE(is_blank("  # only a comment\n\t"));
  EXPECT_FALSE(is_blank("# c\nX"));
}

TEST(PrintTermTest, Examples) {
  ConstantTable table;
  table.intern("a");
  EXPECT_EQ(print_term(Term::zero(), table), "0");
  EXPECT_EQ(print_term(Term::xor_of(X(), K(1)), table), "X + a");
  EXPECT_EQ(print_term(K(7), table), "c7");
}

TEST(PrintTermTest, RoundTripsRandomTerms) {
  RandomTerms gen(2026);
  ConstantTable table;
  for (const char* name : {"a", "b", "c", "d", "e", "f"}) table.intern(name);
  const TermShape shape;
  for (int i = 0; i < 1000; ++i) {
    const Term t = gen.term(shape);
    const std::string text = print_term(t, table);
    EXPECT_EQ(parse_term(text, table), t) << text;
  }
  EXPECT_EQ(table.size(), 6u);
}

TEST(PrintTermTest, LongChainsStayIterative) {
  Term t = K(1);
  for (int i = 0; i < 200000; ++i) t = Term::xor_of(t, X());
  ConstantTable table;
  table.intern("a");
  const std::string text = print_term(t, table);
  EXPECT_EQ(leaf_count(parse_term(text, table)), 200001u);
}

}  // namespace
}  // namespace xoru
