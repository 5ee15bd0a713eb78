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
#include <memory>
#include <span>
#include <vector>

namespace twophoton {

/// Gauss-Hermite rule for integrals of f(x) e^{-x^2} over the real line.
///
/// Nodes are seeded from the eigenvalues of the symmetric Jacobi matrix and
/// polished by Newton iteration on the orthonormal Hermite recurrence.
/// Weights are evaluated in log space so rules with thousands of nodes stay
/// finite (far-tail weights underflow to zero).
class GaussHermiteRule {
 public:
  explicit GaussHermiteRule(std::size_t nodes);

  std::size_t size() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// sum_k w_k f(x_k), approximating the integral of f(x) e^{-x^2}.
  template <typename F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      if (weights_[k] != 0.0) sum += weights_[k] * f(nodes_[k]);
    }
    return sum;
  }

  /// Shared, lazily built rule. Thread-safe.
  static std::shared_ptr<const GaussHermiteRule> cached(std::size_t nodes);

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace twophoton
