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

#include <cmath>
#include <numbers>

#include "twophoton/quadrature.hpp"

using twophoton::GaussHermiteRule;

TEST_CASE("five-point rule matches tabulated nodes and weights") {
  const GaussHermiteRule rule(5);
  const double nodes[] = {-2.020182870456086, -0.958572464613819, 0.0, 0.958572464613819,
                          2.020182870456086};
  const double weights[] = {0.019953242059046, 0.393619323152241, 0.945308720482942,
                            0.393619323152241, 0.019953242059046};
  for (int k = 0; k < 5; ++k) {
    CHECK(rule.nodes()[k] == doctest::Approx(nodes[k]).epsilon(1e-13));
    CHECK(rule.weights()[k] == doctest::Approx(weights[k]).epsilon(1e-12));
  }
}

TEST_CASE("even moments are exact up to degree 2n - 1") {
  for (const std::size_t n : {1, 2, 7, 16, 40}) {
    const GaussHermiteRule rule(n);
    for (std::size_t k = 0; 2 * k < 2 * n; ++k) {
      const double exact = std::tgamma(static_cast<double>(k) + 0.5);
      const double approx =
          rule.integrate([&](double x) { return std::pow(x, 2.0 * static_cast<double>(k)); });
      CAPTURE(n);
      CAPTURE(k);
      CHECK(approx == doctest::Approx(exact).epsilon(1e-12));
    }
    // Odd moments vanish by symmetry.
    CHECK(std::abs(rule.integrate([](double x) { return x * x * x; })) < 1e-13);
  }
}

TEST_CASE("large rules stay finite and normalized") {
  for (const std::size_t n : {512, 1024, 2048}) {
    const GaussHermiteRule rule(n);
    double total = 0.0;
    for (const double w : rule.weights()) {
      CHECK(std::isfinite(w));
      total += w;
    }
    CHECK(total == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    // Nodes strictly increasing and symmetric.
    for (std::size_t k = 1; k < n; ++k) CHECK(rule.nodes()[k] > rule.nodes()[k - 1]);
    CHECK(rule.nodes()[0] == -rule.nodes()[n - 1]);
  }
}

TEST_CASE("Gaussian characteristic function e^{-w^2/4}") {
  const GaussHermiteRule rule(1024);
  for (const double w : {0.5, 5.0, 20.0, 60.0}) {
    const double approx =
        rule.integrate([&](double x) { return std::cos(w * x); }) / std::sqrt(std::numbers::pi);
    CHECK(std::abs(approx - std::exp(-w * w / 4.0)) < 1e-10);
  }
}

TEST_CASE("cached rules are shared") {
  const auto a = GaussHermiteRule::cached(64);
  const auto b = GaussHermiteRule::cached(64);
  CHECK(a.get() == b.get());
  CHECK(a->size() == 64);
  CHECK_THROWS_AS(GaussHermiteRule(0), std::invalid_argument);
}
