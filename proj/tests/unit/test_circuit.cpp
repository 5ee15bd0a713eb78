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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "random_circuits.hpp"
#include "twophoton/circuit.hpp"

using namespace twophoton;
using namespace twophoton::circuit;
using std::numbers::pi;

namespace {

const Amplitude I(0.0, 1.0);

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ParseError parse_error(std::string_view source) {
  try {
    parse(source);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError for: " << source);
  return ParseError(0, 0, "", "");
}

double max_entry_diff(const TransferMatrix& a, const TransferMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.modes(); ++r) {
    for (std::size_t c = 0; c < a.modes(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  }
  return worst;
}

const std::filesystem::path kCorpus = TWOPHOTON_CORPUS_DIR;

}  // namespace

TEST_CASE("parse the Mach-Zehnder source") {
  const CircuitAST ast = parse("modes 2\nbs 0 1\nphase 1 pi/2\nbs 0 1\n");
  CHECK(ast.mode_count == 2);
  REQUIRE(ast.elements.size() == 3);
  CHECK(std::get<BsElement>(ast.elements[0]) == BsElement{0, 1});
  CHECK(std::get<PhaseElement>(ast.elements[1]) == PhaseElement{1, PiMultiple{1.0, 2}});
  CHECK(std::get<BsElement>(ast.elements[2]) == BsElement{0, 1});
}

TEST_CASE("phase expression forms") {
  const CircuitAST ast =
      parse("modes 1\nphase 0 0.25\nphase 0 -3*pi\nphase 0 pi\nphase 0 pi / 6\nphase 0 theta\n");
  REQUIRE(ast.elements.size() == 5);
  auto expr = [&](std::size_t k) { return std::get<PhaseElement>(ast.elements[k]).expr; };
  CHECK(expr(0) == PhaseExpr{Literal{0.25}});
  CHECK(expr(1) == PhaseExpr{PiMultiple{-3.0, 1}});
  CHECK(expr(2) == PhaseExpr{PiMultiple{1.0, 1}});
  CHECK(expr(3) == PhaseExpr{PiMultiple{1.0, 6}});
  CHECK(expr(4) == PhaseExpr{Variable{"theta"}});
  CHECK(variables(ast) == std::vector<std::string>{"theta"});
}

TEST_CASE("comments and blank lines are ignored") {
  const CircuitAST ast = parse("# header comment\n\n  modes 2 # two modes\n\n# x\nbs 1 0\n");
  CHECK(ast.mode_count == 2);
  CHECK(ast.elements.size() == 1);
  CHECK(parse("modes 2\nbs 0 1").elements.size() == 1);  // no trailing newline
}

TEST_CASE("parse errors carry position and a distinguishing message") {
  SUBCASE("index out of range") {
    const ParseError e = parse_error("modes 2\nbs 0 2\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(e.offending_token() == "2");
    CHECK(e.message().find("index 2 out of range") != std::string::npos);
  }
  SUBCASE("unknown keyword") {
    const ParseError e = parse_error("modes 2\n  mirror 0\n");
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(e.message().find("unknown keyword 'mirror'") != std::string::npos);
  }
  SUBCASE("missing header") {
    const ParseError e = parse_error("bs 0 1\n");
    CHECK(e.line() == 1);
    CHECK(e.message().find("missing header") != std::string::npos);
    CHECK(parse_error("# only a comment\n").message().find("missing header") != std::string::npos);
  }
  SUBCASE("other violations") {
    CHECK(parse_error("modes 2\nbs 1 1\n").message().find("distinct") != std::string::npos);
    CHECK(parse_error("modes 2\nmodes 2\n").message().find("duplicate") != std::string::npos);
    CHECK(parse_error("modes 0\n").message().find("positive") != std::string::npos);
    CHECK(parse_error("modes 2\nphase 0 pi/0\n").message().find("zero") != std::string::npos);
    CHECK(parse_error("modes 2\nphase 0 2*theta\n").message().find("'pi'") != std::string::npos);
    CHECK(parse_error("modes 2\nphase 0\n").message().find("missing") != std::string::npos);
    CHECK(parse_error("modes 2\nbs 0 1 1\n").message().find("unexpected token") != std::string::npos);
    CHECK(parse_error("modes 2\nphase 0 1.2.3\n").message().find("malformed") != std::string::npos);
    CHECK(parse_error("modes 2\nphase 0 $\n").column() == 9);
  }
}

TEST_CASE("compile the Mach-Zehnder at phi = 0 and pi") {
  const CircuitAST ast = parse("modes 2\nbs 0 1\nphase 1 phi\nbs 0 1\n");
  const FieldVector at0 = apply(compile(ast, {{"phi", 0.0}}), FieldVector{1.0, 0.0});
  CHECK(std::abs(at0[0]) < 1e-15);
  CHECK(std::abs(at0[1] - I) < 1e-15);

  const FieldVector atpi = apply(compile(ast, {{"phi", pi}}), FieldVector{1.0, 0.0});
  const auto in = intensities(atpi);
  CHECK(in[0].value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(in[1].value() < 1e-24);
  // (E_0/2)(1 - e^{i pi}) = E_0.
  CHECK(std::abs(atpi[0] - Amplitude(1.0, 0.0)) < 1e-12);
}

TEST_CASE("compile errors and identities") {
  const CircuitAST ast = parse("modes 2\nphase 1 phi\nbs 0 1\n");
  CHECK_THROWS_AS(compile(ast), UnboundVariable);
  try {
    compile(ast, {{"psi", 1.0}});
  } catch (const UnboundVariable& e) {
    CHECK(e.name() == "phi");
  }
  CHECK_NOTHROW(compile(ast, {{"phi", 1.0}, {"unused", 2.0}}));

  const TransferMatrix one = compile(parse("modes 1\n"));
  CHECK(one.modes() == 1);
  CHECK(one(0, 0) == Amplitude(1.0, 0.0));
}

TEST_CASE("compile equals the hand-built composition") {
  const CircuitAST ast = parse("modes 3\nbs 0 1\nphase 1 -0.5*pi\nbs 1 2\nphase 2 t\nbs 2 0\n");
  const TransferMatrix by_hand = compose(
      compose(compose(compose(beam_splitter(3, 0, 1), phase_shifter(3, 1, -0.5 * pi)),
                      beam_splitter(3, 1, 2)),
              phase_shifter(3, 2, 0.77)),
      beam_splitter(3, 2, 0));
  CHECK(max_entry_diff(compile(ast, {{"t", 0.77}}), by_hand) < 1e-12);
}

TEST_CASE("render is canonical") {
  const CircuitAST ast = parse("modes 2\nbs 0 1\nphase 1 phi # arm\nbs   0 1\n");
  CHECK(render(ast) == "modes 2\nbs 0 1\nphase 1 phi\nbs 0 1\n");
  CHECK(render(parse("modes 1\nphase 0 pi/2\n")) == "modes 1\nphase 0 pi/2\n");
  CHECK(render(parse("modes 1\nphase 0 1*pi\n")) == "modes 1\nphase 0 pi\n");
  CHECK(render(parse("modes 1\nphase 0 -0.25*pi\n")) == "modes 1\nphase 0 -0.25*pi\n");
  CHECK(render(parse("modes 1\nphase 0 0.1\n")) == "modes 1\nphase 0 0.1\n");
}

TEST_CASE("parse_phase_value") {
  CHECK(parse_phase_value("pi/2") == doctest::Approx(pi / 2));
  CHECK(parse_phase_value("2*pi") == doctest::Approx(2 * pi));
  CHECK(parse_phase_value("-0.3") == -0.3);
  CHECK_THROWS_AS(parse_phase_value("phi"), ParseError);
  CHECK_THROWS_AS(parse_phase_value(""), ParseError);
  CHECK_THROWS_AS(parse_phase_value("pi 2"), ParseError);
}

TEST_CASE("valid corpus round-trips") {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus / "valid")) {
    CAPTURE(entry.path().string());
    const CircuitAST ast = parse(slurp(entry.path()));
    const std::string text = render(ast);
    CHECK(parse(text) == ast);
    CHECK(render(parse(text)) == text);
    ++seen;
  }
  CHECK(seen >= 5);
}

TEST_CASE("invalid corpus fails on the annotated line") {
  const std::regex annotation(R"(#\s*expect-error-line:\s*(\d+))");
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kCorpus / "invalid")) {
    CAPTURE(entry.path().string());
    const std::string text = slurp(entry.path());
    std::smatch m;
    REQUIRE(std::regex_search(text, m, annotation));
    const ParseError e = parse_error(text);
    CHECK(e.line() == std::stoul(m[1]));
    ++seen;
  }
  CHECK(seen >= 8);
}

TEST_CASE("property: random circuits round-trip and compile identically") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 100; ++trial) {
    const CircuitAST ast = testing::random_circuit(rng);
    const std::string text = render(ast);
    const CircuitAST back = parse(text);
    CHECK(back == ast);
    CHECK(render(back) == text);
    const Bindings b{{"a", angle(rng)}, {"b", angle(rng)}};
    CHECK(max_entry_diff(compile(back, b), compile(ast, b)) < 1e-12);
  }
}
