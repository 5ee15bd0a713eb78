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

#include "twophoton/cascade.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace twophoton::cascade {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

Detector detector_for(int side, int exit) {
  return static_cast<Detector>(side * 2 + exit);
}

DetectorOutcome outcome_of(std::array<Detector, 2> hits) {
  DetectorOutcome out;
  for (const Detector d : hits) out.clicks[static_cast<std::size_t>(d)] = true;
  return out;
}

// First-layer routings (side of photon 0, side of photon 1), each equally likely.
std::vector<std::array<int, 2>> first_layer_routes(RoutingHypothesis h) {
  switch (h) {
    case RoutingHypothesis::DeterministicBunching:
      return {{0, 0}, {1, 1}};
    case RoutingHypothesis::IndependentRouting:
      return {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    case RoutingHypothesis::DeterministicAntibunching:
      return {{0, 1}, {1, 0}};
  }
  throw std::invalid_argument("unknown routing hypothesis");
}

}  // namespace

std::string_view name(RoutingHypothesis h) {
  switch (h) {
    case RoutingHypothesis::DeterministicBunching:
      return "bunching";
    case RoutingHypothesis::IndependentRouting:
      return "independent";
    case RoutingHypothesis::DeterministicAntibunching:
      return "antibunching";
  }
  return "unknown";
}

std::optional<RoutingHypothesis> parse_hypothesis(std::string_view text) {
  for (const auto h : kAllHypotheses) {
    if (name(h) == text) return h;
  }
  return std::nullopt;
}

std::string_view pair_label(std::size_t pair_index) {
  static constexpr std::array<std::string_view, kPairCount> labels = {"ab", "ag", "ad",
                                                                      "bg", "bd", "gd"};
  return labels.at(pair_index);
}

std::string_view detector_label(Detector d) {
  static constexpr std::array<std::string_view, kDetectorCount> labels = {"alpha", "beta",
                                                                          "gamma", "delta"};
  return labels[static_cast<std::size_t>(d)];
}

int DetectorOutcome::click_count() const {
  return static_cast<int>(std::count(clicks.begin(), clicks.end(), true));
}

void CoincidenceTally::record(const DetectorOutcome& outcome) {
  ++trials;
  for (std::size_t d = 0; d < kDetectorCount; ++d) singles[d] += outcome.clicks[d] ? 1 : 0;
  for (std::size_t p = 0; p < kPairCount; ++p) pair_counts[p] += outcome.coincidence(p) ? 1 : 0;
}

CoincidenceTally& CoincidenceTally::operator+=(const CoincidenceTally& other) {
  trials += other.trials;
  for (std::size_t d = 0; d < kDetectorCount; ++d) singles[d] += other.singles[d];
  for (std::size_t p = 0; p < kPairCount; ++p) pair_counts[p] += other.pair_counts[p];
  return *this;
}

double CoincidenceTally::single_rate(Detector d) const {
  if (trials == 0) return 0.0;
  return static_cast<double>(singles[static_cast<std::size_t>(d)]) / static_cast<double>(trials);
}

double CoincidenceTally::pair_rate(std::size_t pair_index) const {
  if (trials == 0) return 0.0;
  return static_cast<double>(pair_counts.at(pair_index)) / static_cast<double>(trials);
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

TrialStream::TrialStream(std::uint64_t master_seed, std::uint64_t trial_index)
    : state_(mix64(master_seed + (trial_index + 1) * kGolden)) {}

std::uint64_t TrialStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

bool TrialStream::next_bit() {
  if (bits_left_ == 0) {
    bits_ = next_u64();
    bits_left_ = 64;
  }
  const bool bit = (bits_ & 1U) != 0;
  bits_ >>= 1;
  --bits_left_;
  return bit;
}

DetectorOutcome cascade_trial(RoutingHypothesis h, TrialStream& rng) {
  std::array<int, 2> side{};
  switch (h) {
    case RoutingHypothesis::DeterministicBunching:
      side[0] = side[1] = rng.next_bit() ? 1 : 0;
      break;
    case RoutingHypothesis::IndependentRouting:
      side[0] = rng.next_bit() ? 1 : 0;
      side[1] = rng.next_bit() ? 1 : 0;
      break;
    case RoutingHypothesis::DeterministicAntibunching:
      side[0] = rng.next_bit() ? 1 : 0;
      side[1] = 1 - side[0];
      break;
  }
  // Second layer: every photon exits either port of its splitter 50/50.
  const Detector first = detector_for(side[0], rng.next_bit() ? 1 : 0);
  const Detector second = detector_for(side[1], rng.next_bit() ? 1 : 0);
  return outcome_of({first, second});
}

CoincidenceTally simulate_cascade(RoutingHypothesis h, std::uint64_t trials,
                                  std::uint64_t master_seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("cascade simulation needs at least one trial");
  const unsigned workers = detail::resolve_threads(threads);
  std::vector<CoincidenceTally> partial(std::max<std::size_t>(1, workers));
  detail::parallel_chunks(static_cast<std::size_t>(trials), workers,
                          [&](std::size_t begin, std::size_t end, std::size_t w) {
                            CoincidenceTally local;
                            for (std::size_t t = begin; t < end; ++t) {
                              TrialStream rng(master_seed, t);
                              local.record(cascade_trial(h, rng));
                            }
                            partial[w] = local;
                          });
  CoincidenceTally total;
  for (const auto& p : partial) total += p;
  return total;
}

CascadeExpectation expected_cascade(RoutingHypothesis h) {
  const auto routes = first_layer_routes(h);
  const double path_probability = 1.0 / (static_cast<double>(routes.size()) * 4.0);
  CascadeExpectation exp;
  for (const auto& side : routes) {
    for (int exit0 = 0; exit0 < 2; ++exit0) {
      for (int exit1 = 0; exit1 < 2; ++exit1) {
        const DetectorOutcome out =
            outcome_of({detector_for(side[0], exit0), detector_for(side[1], exit1)});
        for (std::size_t d = 0; d < kDetectorCount; ++d) {
          if (out.clicks[d]) exp.singles[d] += path_probability;
        }
        for (std::size_t p = 0; p < kPairCount; ++p) {
          if (out.coincidence(p)) exp.pairs[p] += path_probability;
        }
        auto it = std::find_if(exp.outcomes.begin(), exp.outcomes.end(),
                               [&](const auto& entry) { return entry.first == out; });
        if (it == exp.outcomes.end()) {
          exp.outcomes.emplace_back(out, path_probability);
        } else {
          it->second += path_probability;
        }
      }
    }
  }
  return exp;
}

std::vector<AntibunchedCase> enumerate_antibunched_cases() {
  std::vector<AntibunchedCase> cases;
  cases.reserve(8);
  for (const auto& side : first_layer_routes(RoutingHypothesis::DeterministicAntibunching)) {
    for (int exit0 = 0; exit0 < 2; ++exit0) {
      for (int exit1 = 0; exit1 < 2; ++exit1) {
        AntibunchedCase c;
        c.side = side;
        c.detector = {detector_for(side[0], exit0), detector_for(side[1], exit1)};
        c.outcome = outcome_of(c.detector);
        cases.push_back(c);
      }
    }
  }
  return cases;
}

}  // namespace twophoton::cascade
