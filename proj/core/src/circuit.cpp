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

#include "twophoton/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

namespace twophoton::circuit {

namespace {

enum class TokenKind { Ident, Number, Star, Slash };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Splits one line (comment already stripped) into tokens.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const char c = line[pos];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    if (is_ident_start(c)) {
      while (pos < line.size() && is_ident_char(line[pos])) ++pos;
      tokens.push_back({TokenKind::Ident, line.substr(start, pos - start), start + 1});
    } else if (is_digit(c) || c == '.' || c == '-' || c == '+') {
      if (c == '-' || c == '+') ++pos;
      while (pos < line.size() && (is_digit(line[pos]) || line[pos] == '.')) ++pos;
      if (pos < line.size() && (line[pos] == 'e' || line[pos] == 'E')) {
        std::size_t look = pos + 1;
        if (look < line.size() && (line[look] == '+' || line[look] == '-')) ++look;
        if (look < line.size() && is_digit(line[look])) {
          pos = look;
          while (pos < line.size() && is_digit(line[pos])) ++pos;
        }
      }
      tokens.push_back({TokenKind::Number, line.substr(start, pos - start), start + 1});
    } else if (c == '*') {
      tokens.push_back({TokenKind::Star, line.substr(pos++, 1), start + 1});
    } else if (c == '/') {
      tokens.push_back({TokenKind::Slash, line.substr(pos++, 1), start + 1});
    } else {
      throw ParseError(line_no, start + 1,
                       std::string("unexpected character '") + c + "'",
                       std::string(1, c));
    }
  }
  return tokens;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : tokens_(std::move(tokens)), line_(line_no), line_len_(line_len) {}

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
  bool done() const { return pos_ == tokens_.size(); }

  const Token& next(std::string_view expected) {
    if (done()) {
      throw ParseError(line_, line_len_ + 1,
                       "missing " + std::string(expected) + " at end of line", "");
    }
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(line_, t.column, message, std::string(t.text));
  }

  double number(const Token& t) const {
    if (t.kind != TokenKind::Number) {
      fail(t, "expected a number, got '" + std::string(t.text) + "'");
    }
    std::string_view body = t.text;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || end != body.data() + body.size() || !std::isfinite(value)) {
      fail(t, "malformed number '" + std::string(t.text) + "'");
    }
    return value;
  }

  unsigned long long integer(const Token& t, std::string_view what) const {
    const bool digits_only =
        t.kind == TokenKind::Number && !t.text.empty() &&
        std::all_of(t.text.begin(), t.text.end(), is_digit);
    if (!digits_only) {
      fail(t, "expected " + std::string(what) + ", got '" + std::string(t.text) + "'");
    }
    unsigned long long value = 0;
    const auto [end, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || end != t.text.data() + t.text.size()) {
      fail(t, std::string(what) + " '" + std::string(t.text) + "' is too large");
    }
    return value;
  }

  std::size_t mode_index(std::size_t mode_count) {
    const Token& t = next("mode index");
    const auto value = integer(t, "mode index");
    if (value >= mode_count) {
      fail(t, "index " + std::string(t.text) + " out of range for " +
                  std::to_string(mode_count) + " modes");
    }
    return static_cast<std::size_t>(value);
  }

  PhaseExpr phase_expr() {
    const Token& head = next("phase value");
    if (head.kind == TokenKind::Number) {
      const double value = number(head);
      if (const Token* t = peek(); t && t->kind == TokenKind::Star) {
        ++pos_;
        const Token& pi = next("'pi' after '*'");
        if (pi.kind != TokenKind::Ident || pi.text != "pi") {
          fail(pi, "expected 'pi' after '*', got '" + std::string(pi.text) + "'");
        }
        return PiMultiple{value, 1};
      }
      return Literal{value};
    }
    if (head.kind != TokenKind::Ident) {
      fail(head, "expected phase value, got '" + std::string(head.text) + "'");
    }
    if (head.text != "pi") return Variable{std::string(head.text)};
    if (const Token* t = peek(); t && t->kind == TokenKind::Slash) {
      ++pos_;
      const Token& d = next("divisor after '/'");
      const auto divisor = integer(d, "integer divisor");
      if (divisor == 0) fail(d, "division by zero in phase value");
      if (divisor > 1'000'000'000ULL) fail(d, "divisor '" + std::string(d.text) + "' is too large");
      return PiMultiple{1.0, static_cast<long>(divisor)};
    }
    return PiMultiple{1.0, 1};
  }

  void expect_end() const {
    if (!done()) {
      const Token& t = tokens_[pos_];
      fail(t, "unexpected token '" + std::string(t.text) + "' after statement");
    }
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_len_;
};

std::string shortest(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string render_expr(const PhaseExpr& expr) {
  struct Visitor {
    std::string operator()(const Literal& l) const { return shortest(l.radians); }
    std::string operator()(const PiMultiple& p) const {
      if (p.coefficient == 1.0) {
        return p.divisor == 1 ? "pi" : "pi/" + std::to_string(p.divisor);
      }
      // Only coefficient or divisor can differ from 1 in a parsed AST; a
      // hand-built AST with both gets a divided literal coefficient.
      const double c = p.divisor == 1 ? p.coefficient
                                      : p.coefficient / static_cast<double>(p.divisor);
      return shortest(c) + "*pi";
    }
    std::string operator()(const Variable& v) const { return v.name; }
  };
  return std::visit(Visitor{}, expr);
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string message,
                       std::string offending_token)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(std::move(message)),
      token_(std::move(offending_token)) {}

UnboundVariable::UnboundVariable(const std::string& name)
    : std::invalid_argument("unbound phase variable '" + name + "'"), name_(name) {}

CircuitAST parse(std::string_view source) {
  CircuitAST ast;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string_view line = source.substr(start, end - start);
    ++line_no;
    const bool last = end == source.size();
    start = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) {
      if (last) break;
      continue;
    }

    LineParser p(std::move(tokens), line_no, line.size());
    const Token& keyword = p.next("keyword");
    if (keyword.kind != TokenKind::Ident) {
      p.fail(keyword, "expected a keyword, got '" + std::string(keyword.text) + "'");
    }
    if (keyword.text == "modes") {
      if (have_header) p.fail(keyword, "duplicate 'modes' header");
      const Token& count = p.next("mode count");
      const auto n = p.integer(count, "mode count");
      if (n == 0) p.fail(count, "mode count must be positive");
      if (n > 4096) p.fail(count, "mode count " + std::string(count.text) + " is too large");
      ast.mode_count = static_cast<std::size_t>(n);
      have_header = true;
    } else if (keyword.text == "bs" || keyword.text == "phase") {
      if (!have_header) {
        p.fail(keyword, "missing header: expected 'modes N' before '" +
                            std::string(keyword.text) + "'");
      }
      if (keyword.text == "bs") {
        const Token* first_tok = p.peek();
        const std::size_t i = p.mode_index(ast.mode_count);
        const Token* second_tok = p.peek();
        const std::size_t j = p.mode_index(ast.mode_count);
        if (i == j) {
          p.fail(second_tok ? *second_tok : *first_tok,
                 "beam splitter needs two distinct modes, got " + std::to_string(i) +
                     " twice");
        }
        ast.elements.emplace_back(BsElement{i, j});
      } else {
        const std::size_t i = p.mode_index(ast.mode_count);
        ast.elements.emplace_back(PhaseElement{i, p.phase_expr()});
      }
    } else {
      p.fail(keyword, "unknown keyword '" + std::string(keyword.text) + "'");
    }
    p.expect_end();
    if (last) break;
  }
  if (!have_header) {
    throw ParseError(1, 1, "missing header: expected 'modes N'", "");
  }
  return ast;
}

double evaluate(const PhaseExpr& expr, const Bindings& bindings) {
  struct Visitor {
    const Bindings& b;
    double operator()(const Literal& l) const { return l.radians; }
    double operator()(const PiMultiple& p) const {
      return p.coefficient * std::numbers::pi / static_cast<double>(p.divisor);
    }
    double operator()(const Variable& v) const {
      const auto it = b.find(v.name);
      if (it == b.end()) throw UnboundVariable(v.name);
      return it->second;
    }
  };
  return std::visit(Visitor{bindings}, expr);
}

TransferMatrix compile(const CircuitAST& ast, const Bindings& bindings) {
  TransferMatrix t = TransferMatrix::identity(ast.mode_count);
  for (const auto& element : ast.elements) {
    if (const auto* bs = std::get_if<BsElement>(&element)) {
      t = compose(t, beam_splitter(ast.mode_count, bs->i, bs->j));
    } else {
      const auto& ps = std::get<PhaseElement>(element);
      t = compose(t, phase_shifter(ast.mode_count, ps.i, evaluate(ps.expr, bindings)));
    }
  }
  return t;
}

std::string render(const CircuitAST& ast) {
  std::string out = "modes " + std::to_string(ast.mode_count) + "\n";
  for (const auto& element : ast.elements) {
    if (const auto* bs = std::get_if<BsElement>(&element)) {
      out += "bs " + std::to_string(bs->i) + " " + std::to_string(bs->j) + "\n";
    } else {
      const auto& ps = std::get<PhaseElement>(element);
      out += "phase " + std::to_string(ps.i) + " " + render_expr(ps.expr) + "\n";
    }
  }
  return out;
}

double parse_phase_value(std::string_view text) {
  auto tokens = tokenize(text, 1);
  if (tokens.empty()) throw ParseError(1, 1, "empty phase value", "");
  LineParser p(std::move(tokens), 1, text.size());
  const Token first = *p.peek();
  const PhaseExpr expr = p.phase_expr();
  p.expect_end();
  if (std::holds_alternative<Variable>(expr)) {
    p.fail(first, "expected a numeric phase, got variable '" + std::string(first.text) + "'");
  }
  return evaluate(expr, {});
}

std::vector<std::string> variables(const CircuitAST& ast) {
  std::set<std::string> names;
  for (const auto& element : ast.elements) {
    if (const auto* ps = std::get_if<PhaseElement>(&element)) {
      if (const auto* v = std::get_if<Variable>(&ps->expr)) names.insert(v->name);
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace twophoton::circuit
