// Copyright 2026 The dimkit Authors.
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

#include "dimkit/equation.hpp"

#include <cstdlib>

#include "dimkit/format.hpp"

namespace dimkit {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_op(char c) {
  switch (c) {
    case '+': case '-': case '*': case '/': case '%': case '=': case '(':
    case ')':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::size_t equation_body_offset(std::string_view eq) {
  std::size_t i = 0;
  while (i < eq.size() && is_ws(eq[i])) ++i;
  if (i < eq.size() && (eq[i] == 'x' || eq[i] == 'X')) {
    std::size_t j = i + 1;
    while (j < eq.size() && is_ws(eq[j])) ++j;
    if (j < eq.size() && eq[j] == '=') return j + 1;
  }
  return 0;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text, std::size_t start)
      : text_(text), pos_(start) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && is_ws(text_[pos_])) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        const double d = unary();
        if (d == 0.0) throw Error(ErrorCode::kDomain,
                                  "division by zero at offset " + std::to_string(at));
        v /= d;
      } else {
        return v;
      }
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    double v = primary();
    while (accept('%')) v /= 100.0;
    return v;
  }

  double primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end", pos_);
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (begin == pos_) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    try {
      return parse_real(text_.substr(begin, pos_ - begin));
    } catch (const Error &) {
      throw ParseError("malformed number", begin);
    }
  }

  std::string_view text_;
  std::size_t pos_;
};

}  // namespace

std::vector<std::string> tokenize_equation(std::string_view equation) {
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < equation.size(); ++i) {
    const char c = equation[i];
    if (is_ws(c)) continue;
    if (!is_digit(c) && c != '.' && !is_op(c)) {
      throw ParseError(std::string("illegal character '") + c + "'", i);
    }
    tokens.emplace_back(1, c);
  }
  return tokens;
}

std::vector<EquationLiteral> equation_literals(std::string_view equation) {
  std::vector<EquationLiteral> out;
  std::size_t i = equation_body_offset(equation);
  while (i < equation.size()) {
    if (!is_digit(equation[i]) && equation[i] != '.') {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < equation.size() && (is_digit(equation[i]) || equation[i] == '.')) {
      ++i;
    }
    try {
      out.push_back({begin, i, parse_real(equation.substr(begin, i - begin))});
    } catch (const Error &) {
      throw ParseError("malformed number", begin);
    }
  }
  return out;
}

double evaluate_equation(std::string_view equation) {
  return Parser(equation, equation_body_offset(equation)).parse();
}

}  // namespace dimkit
