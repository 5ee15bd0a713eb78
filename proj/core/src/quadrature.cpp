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

#include "twophoton/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "twophoton/errors.hpp"

namespace twophoton {

namespace {

struct HermiteAt {
  double ratio;           // p_n(x) / p_n'(x)
  double log_abs_prev;    // log |p_{n-1}(x)|
};

// Orthonormal Hermite recurrence with running rescaling so large |x| and n
// do not overflow.
HermiteAt evaluate_hermite(std::size_t n, double x) {
  constexpr double kRescale = 1e150;
  const double log_rescale = std::log(kRescale);
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  double log_scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next =
        std::sqrt(2.0 / (kd + 1.0)) * x * cur - std::sqrt(kd / (kd + 1.0)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += log_rescale;
    }
  }
  const double derivative = std::sqrt(2.0 * static_cast<double>(n)) * prev;
  return {cur / derivative, std::log(std::abs(prev)) + log_scale};
}

}  // namespace

GaussHermiteRule::GaussHermiteRule(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Gauss-Hermite rule needs at least one node");
  nodes_.resize(n);
  weights_.resize(n);

  if (n == 1) {
    nodes_[0] = 0.0;
    weights_[0] = std::sqrt(std::numbers::pi);
    return;
  }

  // Jacobi matrix: zero diagonal, off-diagonal sqrt(k/2).
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::VectorXd sub(static_cast<Eigen::Index>(n - 1));
  for (Eigen::Index k = 0; k < sub.size(); ++k) {
    sub(k) = std::sqrt(static_cast<double>(k + 1) / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericError("Jacobi eigenvalue solve failed for " + std::to_string(n) + " nodes");
  }
  const Eigen::VectorXd& seeds = solver.eigenvalues();

  const double log_n = std::log(static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    double x = seeds(static_cast<Eigen::Index>(k));
    HermiteAt h{};
    for (int iter = 0; iter < 8; ++iter) {
      h = evaluate_hermite(n, x);
      x -= h.ratio;
      if (std::abs(h.ratio) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    h = evaluate_hermite(n, x);
    nodes_[k] = x;
    weights_[k] = std::exp(-log_n - 2.0 * h.log_abs_prev);
  }

  // The rule is symmetric about zero; enforce it exactly.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t m = n - 1 - k;
    const double x = 0.5 * (nodes_[m] - nodes_[k]);
    const double w = 0.5 * (weights_[m] + weights_[k]);
    nodes_[k] = -x;
    nodes_[m] = x;
    weights_[k] = weights_[m] = w;
  }
  if (n % 2 == 1) nodes_[n / 2] = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(nodes_[k]) || !std::isfinite(weights_[k])) {
      throw NumericError("non-finite Gauss-Hermite node or weight for " +
                         std::to_string(n) + " nodes");
    }
  }
}

std::shared_ptr<const GaussHermiteRule> GaussHermiteRule::cached(std::size_t nodes) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const GaussHermiteRule>> rules;
  std::lock_guard lock(mutex);
  auto& slot = rules[nodes];
  if (!slot) slot = std::make_shared<const GaussHermiteRule>(nodes);
  return slot;
}

}  // namespace twophoton
