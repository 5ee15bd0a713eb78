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

#include <cstddef>
#include <vector>

namespace twophoton::poisson {

/// Photon-number distribution of an attenuated coherent source.
struct PoissonReport {
  double mean = 0.0;
  std::vector<double> pmf;  ///< p_n for n = 0 .. n_max
  double tail = 0.0;        ///< P(n > n_max)
  /// P(n >= 3) / P(n >= 2): share of multi-photon events that carry more
  /// than two photons.
  double contamination = 0.0;
};

/// P(n >= k) for mean mu, accurate for small mu (no 1 - sum cancellation).
double tail_probability(double mu, std::size_t k);

/// P(n >= 3) / P(n >= 2). Throws std::invalid_argument unless mu > 0.
double contamination(double mu);

/// Throws std::invalid_argument unless mu > 0 and n_max >= 3.
PoissonReport poisson_stats(double mu, std::size_t n_max);

/// Largest mean (bisected to 1e-9 relative) whose contamination is at most
/// epsilon. Throws std::invalid_argument unless 0 < epsilon < 1.
double recommend_mean_photon(double epsilon);

}  // namespace twophoton::poisson
