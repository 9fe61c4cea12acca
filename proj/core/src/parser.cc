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

#include <cctype>

#include "xoru/term.h"

namespace xoru {
namespace {

enum class TokenKind { kPlus, kLParen, kRParen, kEquals, kZero, kConstant,
                       kVariable, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string describe(const Token& tok) {
  if (tok.kind == TokenKind::kEnd) return "end of input";
  return "'" + std::string(tok.text) + "'";
}

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t first_line)
      : text_(text), line_(first_line) {}

  Token next() {
    skip_trivia();
    const std::size_t line = line_;
    const std::size_t column = pos_ - line_start_ + 1;
    if (pos_ >= text_.size()) return {TokenKind::kEnd, {}, line, column};

    const char c = text_[pos_];
    auto single = [&](TokenKind kind) {
      return Token{kind, text_.substr(pos_++, 1), line, column};
    };
    switch (c) {
      case '+':
        return single(TokenKind::kPlus);
      case '(':
        return single(TokenKind::kLParen);
      case ')':
        return single(TokenKind::kRParen);
      case '=':
        return single(TokenKind::kEquals);
      default:
        break;
    }

    if (!is_ident_char(c)) {
      throw ParseError(line, column,
                       "unexpected character '" + std::string(1, c) + "'");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);

    const unsigned char first = static_cast<unsigned char>(word.front());
    if (std::isdigit(first)) {
      if (word != "0") {
        throw ParseError(line, column,
                         "'" + std::string(word) +
                             "': the only numeric literal is the unit 0");
      }
      return {TokenKind::kZero, word, line, column};
    }
    if (std::isupper(first)) return {TokenKind::kVariable, word, line, column};
    if (std::islower(first)) return {TokenKind::kConstant, word, line, column};
    throw ParseError(line, column,
                     "identifier '" + std::string(word) +
                         "' must start with a letter");
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        line_start_ = pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, ConstantTable& constants,
         std::size_t first_line)
      : lexer_(text, first_line), constants_(constants) {
    advance();
  }

  // sum := primary ('+' primary)*
  Term parse_sum() {
    Term acc = parse_primary();
    while (current_.kind == TokenKind::kPlus) {
      advance();
      acc = Term::xor_of(std::move(acc), parse_primary());
    }
    return acc;
  }

  void expect(TokenKind kind, const char* what) {
    if (current_.kind != kind) {
      throw ParseError(current_.line, current_.column,
                       std::string("expected ") + what + ", found " +
                           describe(current_));
    }
    advance();
  }

 private:
  Term parse_primary() {
    const Token tok = current_;
    switch (tok.kind) {
      case TokenKind::kZero:
        advance();
        return Term::zero();
      case TokenKind::kConstant:
        advance();
        return Term::constant(constants_.intern(tok.text));
      case TokenKind::kVariable:
        advance();
        return Term::variable(std::string(tok.text));
      case TokenKind::kLParen: {
        advance();
        Term inner = parse_sum();
        expect(TokenKind::kRParen, "')'");
        return inner;
      }
      default:
        throw ParseError(tok.line, tok.column,
                         "expected a term, found " + describe(tok));
    }
  }

  void advance() { current_ = lexer_.next(); }

  Lexer lexer_;
  ConstantTable& constants_;
  Token current_{TokenKind::kEnd, {}, 0, 0};
};

}  // namespace

Term parse_term(std::string_view text, ConstantTable& constants) {
  Parser parser(text, constants, 1);
  Term t = parser.parse_sum();
  parser.expect(TokenKind::kEnd, "'+' or end of input");
  return t;
}

std::pair<Term, Term> parse_equation(std::string_view text,
                                     ConstantTable& constants,
                                     std::size_t first_line) {
  Parser parser(text, constants, first_line);
  Term lhs = parser.parse_sum();
  parser.expect(TokenKind::kEquals, "'+' or '='");
  Term rhs = parser.parse_sum();
  parser.expect(TokenKind::kEnd, "'+' or end of line");
  return {std::move(lhs), std::move(rhs)};
}

bool is_blank(std::string_view text) {
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') {
      in_comment = false;
    } else if (c == '#') {
      in_comment = true;
    } else if (!in_comment && !std::isspace(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

bool is_variable_identifier(std::string_view name) {
  if (name.empty() || !std::isupper(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

bool is_constant_identifier(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  for (char c : name) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

}  // namespace xoru
