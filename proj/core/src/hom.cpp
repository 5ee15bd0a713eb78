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

#include "twophoton/hom.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "twophoton/errors.hpp"
#include "twophoton/quadrature.hpp"

namespace twophoton::hom {

namespace {

constexpr double kPi = std::numbers::pi;

double square(double x) { return x * x; }

// Angular frequency, in the Gauss-Hermite variable x, of the oscillating part
// of sin^2(2 pi (f_c + sqrt2 width x) tau).
double oscillation(double tau, const SpectralProfile& profile) {
  return 4.0 * kPi * std::numbers::sqrt2 * profile.width() * std::abs(tau);
}

}  // namespace

SpectralProfile::SpectralProfile(double sigma, double scale, double center_offset)
    : sigma_(sigma), scale_(scale), center_(center_offset) {
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw std::invalid_argument("spectral sigma must be positive, got " + std::to_string(sigma));
  }
  if (!std::isfinite(scale) || scale <= 0.0 || scale > 1.0) {
    throw std::invalid_argument("bandwidth scale must lie in (0, 1], got " +
                                std::to_string(scale));
  }
  if (!std::isfinite(center_offset)) {
    throw std::invalid_argument("center offset must be finite");
  }
}

std::pair<Intensity, Intensity> bs_pair_intensities(double delta_phi, Intensity i0) {
  const double s = std::sin(delta_phi);
  // max() only strips -0.0 and rounding below zero at |sin| = 1.
  return {Intensity(std::max(0.0, i0.value() * (1.0 - s))),
          Intensity(std::max(0.0, i0.value() * (1.0 + s)))};
}

double normalized_coincidence(double delta_phi) { return square(std::cos(delta_phi)); }

PairPhase pair_phase(double delta_f, double tau, double delta_phi_prime) {
  const double phi_rel = 2.0 * kPi * delta_f * tau;
  return {phi_rel, delta_phi_prime, phi_rel + delta_phi_prime};
}

std::vector<std::vector<double>> coincidence_surface(std::span<const double> delta_f_grid,
                                                     std::span<const double> tau_grid) {
  if (delta_f_grid.empty() || tau_grid.empty()) {
    throw std::invalid_argument("coincidence surface needs nonempty grids");
  }
  std::vector<std::vector<double>> surface(delta_f_grid.size(),
                                           std::vector<double>(tau_grid.size()));
  for (std::size_t k = 0; k < delta_f_grid.size(); ++k) {
    for (std::size_t m = 0; m < tau_grid.size(); ++m) {
      // dphi' = pi/2 turns cos^2(dphi) into sin^2(phi_rel); use the latter
      // directly so zero detuning or delay gives an exact zero.
      surface[k][m] = square(std::sin(pair_phase(delta_f_grid[k], tau_grid[m]).phi_rel));
    }
  }
  return surface;
}

std::size_t effective_nodes(double tau, const SpectralProfile& profile, std::size_t requested) {
  if (requested < kMinQuadratureNodes) {
    throw std::invalid_argument("at least " + std::to_string(kMinQuadratureNodes) +
                                " quadrature nodes are required, got " +
                                std::to_string(requested));
  }
  const double omega = oscillation(tau, profile);
  // Empirical resolution bound for e^{-x^2} cos(omega x): error < 1e-10
  // once n exceeds omega^2/8 + 4 omega + 32.
  const double needed = std::ceil(omega * omega / 8.0 + 4.0 * omega + 32.0);
  if (!(needed <= static_cast<double>(kMaxQuadratureNodes))) {
    throw NumericError("delay " + std::to_string(tau) +
                       " needs more than " + std::to_string(kMaxQuadratureNodes) +
                       " quadrature nodes");
  }
  const auto n = static_cast<std::size_t>(needed);
  if (n <= requested) return requested;
  return std::min(std::bit_ceil(n), kMaxQuadratureNodes);
}

double dip_point_fixed_rule(double tau, const SpectralProfile& profile, std::size_t nodes) {
  if (!std::isfinite(tau)) throw std::invalid_argument("delay must be finite");
  const auto rule = GaussHermiteRule::cached(nodes);
  // sin^2(t) = (1 - cos 2t) / 2, so the average is (1 - C) / 2 with
  // C = E[cos(4 pi (f_c + df) tau)] and df = sqrt2 * width * x.
  const double spread = std::numbers::sqrt2 * profile.width();
  const double fc = profile.center_offset();
  double sum = 0.0;
  double rounding = 0.0;  // first-order bound on the rounding error of sum
  const auto nodes_x = rule->nodes();
  const auto weights = rule->weights();
  for (std::size_t k = 0; k < nodes_x.size(); ++k) {
    if (weights[k] == 0.0) continue;
    const double angle = 4.0 * kPi * (fc + spread * nodes_x[k]) * tau;
    sum += weights[k] * std::cos(angle);
    rounding += weights[k] * (4.0 + std::abs(angle));
  }
  double c = sum / std::sqrt(kPi);
  rounding *= std::numeric_limits<double>::epsilon() / std::sqrt(kPi);
  // Fully washed out: C is indistinguishable from zero at working precision.
  if (std::abs(c) <= rounding) c = 0.0;
  const double value = 0.5 * (1.0 - c);
  if (!std::isfinite(value)) {
    throw NumericError("non-finite ensemble average at delay " + std::to_string(tau));
  }
  return std::clamp(value, 0.0, 1.0);
}

double dip_point(double tau, const SpectralProfile& profile, std::size_t quadrature_nodes) {
  return dip_point_fixed_rule(tau, profile, effective_nodes(tau, profile, quadrature_nodes));
}

double dip_closed_form(double tau, const SpectralProfile& profile) {
  const double damping = std::exp(-8.0 * kPi * kPi * square(profile.width() * tau));
  return 0.5 * (1.0 - std::cos(4.0 * kPi * profile.center_offset() * tau) * damping);
}

DipCurve dip_curve(std::span<const double> tau_grid, std::span<const SpectralProfile> profiles,
                   std::size_t quadrature_nodes, unsigned threads) {
  if (tau_grid.empty() || profiles.empty()) {
    throw std::invalid_argument("dip curve needs a nonempty delay grid and profile list");
  }
  DipCurve curve;
  curve.taus.assign(tau_grid.begin(), tau_grid.end());
  const std::size_t points = tau_grid.size();

  // Validate and build every rule up front so workers only read caches.
  std::vector<std::size_t> rule_sizes(points * profiles.size());
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    for (std::size_t t = 0; t < points; ++t) {
      const std::size_t n = effective_nodes(tau_grid[t], profiles[p], quadrature_nodes);
      rule_sizes[p * points + t] = n;
      GaussHermiteRule::cached(n);
    }
  }

  std::vector<double> flat(rule_sizes.size());
  detail::parallel_chunks(flat.size(), threads, [&](std::size_t begin, std::size_t end,
                                                    std::size_t) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      flat[idx] = dip_point_fixed_rule(tau_grid[idx % points], profiles[idx / points],
                                       rule_sizes[idx]);
    }
  });

  curve.series.reserve(profiles.size());
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const auto first = flat.begin() + static_cast<std::ptrdiff_t>(p * points);
    curve.series.push_back({profiles[p], std::vector<double>(first, first + static_cast<std::ptrdiff_t>(points))});
  }
  return curve;
}

std::pair<Intensity, Intensity> mzi_intensities(double phi, Intensity i0) {
  const double c = std::cos(phi);
  return {Intensity(std::max(0.0, 0.5 * i0.value() * (1.0 - c))),
          Intensity(std::max(0.0, 0.5 * i0.value() * (1.0 + c)))};
}

std::pair<Amplitude, Amplitude> mzi_fields(double phi, double phi_alpha_beta, Amplitude e0) {
  const Amplitude e_phi = std::polar(1.0, phi);
  const Amplitude i(0.0, 1.0);
  const Amplitude alpha = 0.5 * e0 * (1.0 - e_phi);
  const Amplitude beta = 0.5 * i * e0 * std::polar(1.0, phi_alpha_beta) * (1.0 + e_phi);
  return {alpha, beta};
}

}  // namespace twophoton::hom
