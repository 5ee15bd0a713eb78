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
#include <numeric>
#include <stdexcept>

#include "twophoton/poisson.hpp"

using namespace twophoton::poisson;

TEST_CASE("pmf ratio p3/p2 = mu/3") {
  for (const double mu : {0.01, 0.1, 0.5}) {
    const PoissonReport r = poisson_stats(mu, 5);
    CHECK(std::abs(r.pmf[3] / r.pmf[2] - mu / 3.0) < 1e-12);
  }
}

TEST_CASE("normalization") {
  for (const double mu : {1e-4, 0.3, 1.0, 7.5}) {
    const PoissonReport r = poisson_stats(mu, 20);
    const double total = std::accumulate(r.pmf.begin(), r.pmf.end(), 0.0) + r.tail;
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(r.contamination >= 0.0);
    CHECK(r.contamination <= 1.0);
  }
}

TEST_CASE("contamination values") {
  // P(n>=3)/P(n>=2), frozen from a 40-digit evaluation.
  CHECK(contamination(0.01) == doctest::Approx(0.0033305537052505881).epsilon(1e-12));
  CHECK(contamination(0.1) == doctest::Approx(0.033053719503420754).epsilon(1e-12));
  CHECK(contamination(0.5) == doctest::Approx(0.15950153322693273).epsilon(1e-12));
  CHECK(contamination(1.0) == doctest::Approx(0.30389440441133359).epsilon(1e-12));
  // Small-mean limit.
  CHECK(contamination(1e-8) == doctest::Approx(1e-8 / 3.0).epsilon(1e-6));
  CHECK(contamination(1e-300) == doctest::Approx(1e-300 / 3.0).epsilon(1e-6));
  // Increasing in mu.
  double prev = 0.0;
  for (double mu = 1e-3; mu < 50.0; mu *= 1.3) {
    const double c = contamination(mu);
    CHECK(c > prev);
    prev = c;
  }
}

TEST_CASE("tail probability") {
  CHECK(tail_probability(0.2, 0) == 1.0);
  CHECK(tail_probability(0.2, 1) == doctest::Approx(-std::expm1(-0.2)).epsilon(1e-14));
  CHECK(tail_probability(3.0, 2) == doctest::Approx(1.0 - 4.0 * std::exp(-3.0)).epsilon(1e-14));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(poisson_stats(0.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(poisson_stats(-1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(poisson_stats(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(recommend_mean_photon(0.0), std::invalid_argument);
  CHECK_THROWS_AS(recommend_mean_photon(1.0), std::invalid_argument);
  CHECK_THROWS_AS(recommend_mean_photon(-0.5), std::invalid_argument);
}

TEST_CASE("recommended mean photon number") {
  // Frozen from bisection against a 40-digit pmf.
  CHECK(recommend_mean_photon(0.1) == doctest::Approx(0.30806671060078441).epsilon(1e-8));
  CHECK(recommend_mean_photon(0.01) == doctest::Approx(0.030075528874038542).epsilon(1e-8));
  CHECK(recommend_mean_photon(0.001) == doctest::Approx(0.0030007505253846756).epsilon(1e-8));
  double prev = 0.0;
  for (const double eps : {1e-4, 1e-3, 1e-2, 0.05, 0.1, 0.5, 0.9}) {
    const double mu = recommend_mean_photon(eps);
    CHECK(contamination(mu) <= eps);
    CHECK(contamination(mu * (1.0 + 1e-8)) > eps);
    CHECK(mu >= prev);
    prev = mu;
  }
}
