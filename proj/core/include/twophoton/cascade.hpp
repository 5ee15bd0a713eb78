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
 * @file cascade.hpp
 * @brief Monte Carlo and exhaustive analysis of the cascaded beam-splitter
 *        coincidence test.
 *
 * Two photons enter the first beam splitter through one port. Its outputs
 * A and B each feed a second balanced splitter: A exits to detectors alpha
 * or beta, B to gamma or delta. Detectors are ideal and number-blind, so a
 * detector clicks when at least one photon reaches it.
 *
 * Same-side coincidences (alpha-beta, gamma-delta) can only come from both
 * photons leaving the first splitter together; cross-side coincidences only
 * from the photons separating there.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace twophoton::cascade {

/// How the first beam splitter routes the photon pair.
enum class RoutingHypothesis {
  DeterministicBunching,      ///< both photons exit the same, uniformly random, port
  IndependentRouting,         ///< each photon picks a port 50/50 on its own
  DeterministicAntibunching,  ///< one photon to each port
};

inline constexpr std::array kAllHypotheses = {
    RoutingHypothesis::DeterministicBunching,
    RoutingHypothesis::IndependentRouting,
    RoutingHypothesis::DeterministicAntibunching,
};

/// CLI-facing names: "bunching", "independent", "antibunching".
std::string_view name(RoutingHypothesis h);
std::optional<RoutingHypothesis> parse_hypothesis(std::string_view text);

enum class Detector : std::uint8_t { Alpha = 0, Beta = 1, Gamma = 2, Delta = 3 };
inline constexpr std::size_t kDetectorCount = 4;

/// The six unordered detector pairs in a fixed order:
/// alpha-beta, alpha-gamma, alpha-delta, beta-gamma, beta-delta, gamma-delta.
inline constexpr std::size_t kPairCount = 6;
inline constexpr std::array<std::pair<Detector, Detector>, kPairCount> kPairs = {{
    {Detector::Alpha, Detector::Beta},
    {Detector::Alpha, Detector::Gamma},
    {Detector::Alpha, Detector::Delta},
    {Detector::Beta, Detector::Gamma},
    {Detector::Beta, Detector::Delta},
    {Detector::Gamma, Detector::Delta},
}};

/// Short labels "ab", "ag", "ad", "bg", "bd", "gd" matching kPairs.
std::string_view pair_label(std::size_t pair_index);
std::string_view detector_label(Detector d);

/// True for alpha-beta and gamma-delta.
constexpr bool same_side(std::size_t pair_index) {
  return pair_index == 0 || pair_index == 5;
}

struct DetectorOutcome {
  std::array<bool, kDetectorCount> clicks{};

  bool clicked(Detector d) const { return clicks[static_cast<std::size_t>(d)]; }
  bool coincidence(std::size_t pair_index) const {
    return clicked(kPairs[pair_index].first) && clicked(kPairs[pair_index].second);
  }
  int click_count() const;

  friend bool operator==(const DetectorOutcome&, const DetectorOutcome&) = default;
};

struct CoincidenceTally {
  std::uint64_t trials = 0;
  std::array<std::uint64_t, kDetectorCount> singles{};
  std::array<std::uint64_t, kPairCount> pair_counts{};

  void record(const DetectorOutcome& outcome);
  CoincidenceTally& operator+=(const CoincidenceTally& other);

  double single_rate(Detector d) const;
  double pair_rate(std::size_t pair_index) const;

  friend bool operator==(const CoincidenceTally&, const CoincidenceTally&) = default;
};

/// SplitMix64 output function.
std::uint64_t mix64(std::uint64_t x);

/// Random bits for one trial. The stream is a pure function of
/// (master_seed, trial_index): its state starts at
/// mix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15) and then
/// advances as a SplitMix64 generator.
class TrialStream {
 public:
  TrialStream(std::uint64_t master_seed, std::uint64_t trial_index);

  std::uint64_t next_u64();
  /// Fair coin, drawn one bit at a time from next_u64().
  bool next_bit();

 private:
  std::uint64_t state_;
  std::uint64_t bits_ = 0;
  int bits_left_ = 0;
};

/// One two-photon trial through the cascade.
DetectorOutcome cascade_trial(RoutingHypothesis h, TrialStream& rng);

/// Tally over trials 0 .. trials-1. The result depends only on
/// (h, trials, master_seed); `threads` (0 = hardware concurrency) only
/// changes how the work is split. Throws std::invalid_argument if trials == 0.
CoincidenceTally simulate_cascade(RoutingHypothesis h, std::uint64_t trials,
                                  std::uint64_t master_seed, unsigned threads = 0);

/// Exact probabilities from enumerating every equiprobable routing path.
struct CascadeExpectation {
  std::array<double, kDetectorCount> singles{};
  std::array<double, kPairCount> pairs{};
  /// Distinct click patterns with their total probability.
  std::vector<std::pair<DetectorOutcome, double>> outcomes;
};

CascadeExpectation expected_cascade(RoutingHypothesis h);

/// One photon to each side of the first splitter.
struct AntibunchedCase {
  /// Side taken by photon 0 and photon 1 (0 = A, 1 = B).
  std::array<int, 2> side{};
  /// Detector reached by photon 0 and photon 1.
  std::array<Detector, 2> detector{};
  DetectorOutcome outcome;
};

/// All 8 ways the pair can split at the first splitter and exit the second
/// layer: 2 photon-to-side assignments x 2 exits on A x 2 exits on B.
std::vector<AntibunchedCase> enumerate_antibunched_cases();

}  // namespace twophoton::cascade
