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

#include "twophoton/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twophoton::poisson {

namespace {

void check_mean(double mu) {
  if (!std::isfinite(mu) || mu <= 0.0) {
    throw std::invalid_argument("mean photon number must be positive, got " +
                                std::to_string(mu));
  }
}

double pmf_at(double mu, std::size_t n) {
  const double k = static_cast<double>(n);
  return std::exp(-mu + k * std::log(mu) - std::lgamma(k + 1.0));
}

}  // namespace

double tail_probability(double mu, std::size_t k) {
  check_mean(mu);
  if (k == 0) return 1.0;
  if (mu >= 1.0 && static_cast<double>(k) <= mu + 1.0) {
    // Head is small against 1 here; the complement loses nothing.
    double head = 0.0;
    for (std::size_t n = 0; n < k; ++n) head += pmf_at(mu, n);
    return std::max(0.0, 1.0 - head);
  }
  // Upward series; terms decay once n > mu.
  double term = pmf_at(mu, k);
  double sum = 0.0;
  for (std::size_t n = k; term > 0.0; ++n) {
    sum += term;
    if (static_cast<double>(n) > mu && term < 1e-18 * sum) break;
    term *= mu / static_cast<double>(n + 1);
  }
  return sum;
}

double contamination(double mu) {
  check_mean(mu);
  const double at_least_two = tail_probability(mu, 2);
  if (at_least_two <= 0.0) {
    // mu so small that P(n >= 2) underflows; leading order is mu / 3.
    return mu / 3.0;
  }
  return tail_probability(mu, 3) / at_least_two;
}

PoissonReport poisson_stats(double mu, std::size_t n_max) {
  check_mean(mu);
  if (n_max < 3) {
    throw std::invalid_argument("n_max must be at least 3, got " + std::to_string(n_max));
  }
  PoissonReport report;
  report.mean = mu;
  report.pmf.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) report.pmf[n] = pmf_at(mu, n);
  report.tail = tail_probability(mu, n_max + 1);
  report.contamination = contamination(mu);
  return report;
}

double recommend_mean_photon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  // contamination rises from 0 (mu -> 0) toward 1 (mu -> inf).
  double lo = 0.0;
  double hi = 3.0 * epsilon;
  while (contamination(hi) <= epsilon) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) throw std::invalid_argument("no mean satisfies the bound");
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (contamination(mid) <= epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace twophoton::poisson
