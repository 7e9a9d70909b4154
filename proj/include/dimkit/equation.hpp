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

// Arithmetic over MWP solution equations: digits, '.', + - * / % = ( ).

#ifndef DIMKIT_EQUATION_HPP_
#define DIMKIT_EQUATION_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dimkit/errors.hpp"

namespace dimkit {

// One token per digit and per operator character; whitespace is dropped.
// Any other character raises ParseError with its byte offset.
std::vector<std::string> tokenize_equation(std::string_view equation);

// Number literal of an equation, by byte range.
struct EquationLiteral {
  std::size_t begin = 0;
  std::size_t end = 0;
  double value = 0.0;
};

// Byte offset just past a leading "x=" (spaces allowed), else 0.
std::size_t equation_body_offset(std::string_view equation);

// Literals in order of appearance. A leading "x=" is skipped.
std::vector<EquationLiteral> equation_literals(std::string_view equation);

// Standard precedence (* / over + -), unary minus, parentheses and postfix
// '%' meaning /100. A leading "x=" is ignored. Division by zero raises
// Error(kDomain).
double evaluate_equation(std::string_view equation);

}  // namespace dimkit

#endif  // DIMKIT_EQUATION_HPP_
