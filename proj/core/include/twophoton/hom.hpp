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
 * @file hom.hpp
 * @brief Two-photon interference on a single balanced beam splitter.
 *
 * Closed forms for the output intensities and the normalized coincidence
 * of a mutually coherent photon pair, the Mach-Zehnder output fields, and
 * the spectral ensemble average that turns the single-pair coincidence
 * cos^2(dphi) into the delay-dependent dip R(tau).
 *
 * Phase model: a pair with frequency difference df and arrival delay tau
 * picks up phi_rel = 2 pi df tau on top of the generation offset dphi'.
 * With dphi' = +-pi/2 the coincidence becomes sin^2(phi_rel), which is zero
 * at tau = 0 and averages to 1/2 (the incoherent level) once the detuning
 * spread washes the phase out.
 */

#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "twophoton/optics.hpp"

namespace twophoton::hom {

inline constexpr double kDefaultPhaseOffset = std::numbers::pi / 2;
inline constexpr std::size_t kDefaultQuadratureNodes = 64;
inline constexpr std::size_t kMinQuadratureNodes = 16;
/// Upper bound on automatically chosen rule sizes.
inline constexpr std::size_t kMaxQuadratureNodes = 16384;

/// Total relative phase of a pair: delta_phi = phi_rel + delta_phi_prime.
struct PairPhase {
  double phi_rel = 0.0;
  double delta_phi_prime = 0.0;
  double delta_phi = 0.0;
};

/// Gaussian detuning distribution with standard deviation sigma * scale
/// around center_offset.
class SpectralProfile {
 public:
  /// Throws std::invalid_argument unless sigma > 0 and 0 < scale <= 1.
  SpectralProfile(double sigma, double scale = 1.0, double center_offset = 0.0);

  double sigma() const { return sigma_; }
  double scale() const { return scale_; }
  double center_offset() const { return center_; }
  double width() const { return sigma_ * scale_; }

 private:
  double sigma_;
  double scale_;
  double center_;
};

struct DipSeries {
  SpectralProfile profile;
  std::vector<double> values;
};

struct DipCurve {
  std::vector<double> taus;
  std::vector<DipSeries> series;  ///< one per requested profile, same order
};

/// (I0 (1 - sin dphi), I0 (1 + sin dphi)).
std::pair<Intensity, Intensity> bs_pair_intensities(double delta_phi, Intensity i0);

/// cos^2(dphi).
double normalized_coincidence(double delta_phi);

PairPhase pair_phase(double delta_f, double tau,
                     double delta_phi_prime = kDefaultPhaseOffset);

/// Entry (k, m) is sin^2(2 pi df_k tau_m). Row-major, df along rows.
std::vector<std::vector<double>> coincidence_surface(std::span<const double> delta_f_grid,
                                                     std::span<const double> tau_grid);

/// Rule size actually used by dip_point: the requested count, raised when
/// the integrand oscillates faster than that rule can resolve.
std::size_t effective_nodes(double tau, const SpectralProfile& profile,
                            std::size_t requested);

/// Ensemble-averaged coincidence E[sin^2(2 pi (f_c + df) tau)] with
/// df ~ N(0, width^2), by Gauss-Hermite quadrature.
/// Throws std::invalid_argument if quadrature_nodes < kMinQuadratureNodes
/// and NumericError if the required rule exceeds kMaxQuadratureNodes.
double dip_point(double tau, const SpectralProfile& profile,
                 std::size_t quadrature_nodes = kDefaultQuadratureNodes);

/// Same average evaluated with exactly `nodes` nodes, no adjustment.
double dip_point_fixed_rule(double tau, const SpectralProfile& profile, std::size_t nodes);

/// (1 - cos(4 pi f_c tau) exp(-8 pi^2 (width tau)^2)) / 2.
double dip_closed_form(double tau, const SpectralProfile& profile);

/// One series per profile. Points are evaluated on up to `threads` worker
/// threads (0 = hardware concurrency); each point is computed independently.
DipCurve dip_curve(std::span<const double> tau_grid, std::span<const SpectralProfile> profiles,
                   std::size_t quadrature_nodes = kDefaultQuadratureNodes,
                   unsigned threads = 0);

/// Mach-Zehnder output intensities ((I0/2)(1 - cos phi), (I0/2)(1 + cos phi)).
std::pair<Intensity, Intensity> mzi_intensities(double phi, Intensity i0);

/// Mach-Zehnder output fields for input (e0, 0):
/// E_alpha = (e0/2)(1 - e^{i phi}), E_beta = (i e0/2) e^{i phi_ab} (1 + e^{i phi}).
std::pair<Amplitude, Amplitude> mzi_fields(double phi, double phi_alpha_beta, Amplitude e0);

}  // namespace twophoton::hom
