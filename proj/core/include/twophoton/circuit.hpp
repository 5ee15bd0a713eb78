// Copyright 2026 The twophoton Authors
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

#pragma once

/**
 * @file circuit.hpp
 * @brief Line-oriented text format for N-mode interferometers.
 *
 * A circuit file starts with a `modes N` header followed by one element per
 * line:
 *
 *     # Mach-Zehnder interferometer
 *     modes 2
 *     bs 0 1
 *     phase 1 phi
 *     bs 0 1
 *
 * Phase arguments are a decimal literal (`0.25`), a multiple of pi
 * (`pi`, `pi/2`, `-0.5*pi`) or a variable name bound at compile time.
 * `#` starts a comment that runs to the end of the line. Mode indices are
 * 0-based.
 */

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "twophoton/optics.hpp"

namespace twophoton::circuit {

/// Phase given as a plain number of radians.
struct Literal {
  double radians = 0.0;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// coefficient * pi / divisor. The grammar only produces coefficient == 1
/// or divisor == 1, never both different from 1.
struct PiMultiple {
  double coefficient = 1.0;
  long divisor = 1;
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

using PhaseExpr = std::variant<Literal, PiMultiple, Variable>;

struct BsElement {
  std::size_t i = 0;
  std::size_t j = 1;
  friend bool operator==(const BsElement&, const BsElement&) = default;
};

struct PhaseElement {
  std::size_t i = 0;
  PhaseExpr expr;
  friend bool operator==(const PhaseElement&, const PhaseElement&) = default;
};

using Element = std::variant<BsElement, PhaseElement>;

struct CircuitAST {
  std::size_t mode_count = 1;
  std::vector<Element> elements;
  friend bool operator==(const CircuitAST&, const CircuitAST&) = default;
};

/// Position-tagged syntax or semantic error. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message,
             std::string offending_token);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }
  const std::string& offending_token() const { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
  std::string token_;
};

/// A phase variable had no binding at compile time.
class UnboundVariable : public std::invalid_argument {
 public:
  explicit UnboundVariable(const std::string& name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

using Bindings = std::map<std::string, double, std::less<>>;

/// Throws ParseError on the first violation.
CircuitAST parse(std::string_view source);

/// Multiplies element matrices in source order. Throws UnboundVariable.
TransferMatrix compile(const CircuitAST& ast, const Bindings& bindings = {});

/// Canonical text, one element per line; parse(render(ast)) == ast.
std::string render(const CircuitAST& ast);

/// Parses a standalone phase value such as "0.3", "pi/2" or "-1.5*pi".
/// Variables are rejected. Throws ParseError with line 1.
double parse_phase_value(std::string_view text);

/// Radians for a phase expression; looks variables up in `bindings`.
double evaluate(const PhaseExpr& expr, const Bindings& bindings);

/// Names of all variables used by the circuit, sorted and unique.
std::vector<std::string> variables(const CircuitAST& ast);

}  // namespace twophoton::circuit
