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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace twophoton {

/// Complex field amplitude of a single optical mode.
using Amplitude = std::complex<double>;

/// Detected intensity |E|^2. Always nonnegative and finite.
class Intensity {
 public:
  constexpr Intensity() = default;
  /// Throws std::invalid_argument for negative or non-finite values.
  explicit Intensity(double value);

  constexpr double value() const { return value_; }

  friend constexpr bool operator==(Intensity, Intensity) = default;

 private:
  double value_ = 0.0;
};

/// Fixed-length column of mode amplitudes, indexed from 0.
class FieldVector {
 public:
  explicit FieldVector(std::size_t modes);
  FieldVector(std::initializer_list<Amplitude> amplitudes);
  explicit FieldVector(std::vector<Amplitude> amplitudes);

  std::size_t size() const { return modes_.size(); }
  const Amplitude& operator[](std::size_t i) const { return modes_[i]; }
  Amplitude& operator[](std::size_t i) { return modes_[i]; }
  std::span<const Amplitude> amplitudes() const { return modes_; }

  /// Sum of |E_k|^2 over all modes.
  double total_intensity() const;

 private:
  std::vector<Amplitude> modes_;
};

/// Unitary N x N linear-optical transfer matrix.
///
/// Instances are only produced by the factories below and by compose(), all
/// of which keep max|T^dagger T - I| well under kUnitarityTolerance.
class TransferMatrix {
 public:
  static constexpr double kUnitarityTolerance = 1e-12;

  static TransferMatrix identity(std::size_t modes);

  std::size_t modes() const { return static_cast<std::size_t>(m_.rows()); }
  Amplitude operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const Eigen::MatrixXcd& matrix() const { return m_; }

  /// max-norm of (T^dagger T - I).
  double unitarity_defect() const;

 private:
  explicit TransferMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  friend TransferMatrix beam_splitter(std::size_t, std::size_t, std::size_t);
  friend TransferMatrix phase_shifter(std::size_t, std::size_t, double);
  friend TransferMatrix compose(const TransferMatrix&, const TransferMatrix&);

  Eigen::MatrixXcd m_;
};

/// Balanced lossless beam splitter (1/sqrt2)[[1, i], [i, 1]] acting on modes
/// (i, j) of an n-mode network; identity on every other mode.
TransferMatrix beam_splitter(std::size_t n, std::size_t i, std::size_t j);

/// Phase shift e^{i phi} on mode i of an n-mode network.
TransferMatrix phase_shifter(std::size_t n, std::size_t i, double phi);

/// Network that applies `first`, then `second` (i.e. second * first).
TransferMatrix compose(const TransferMatrix& first, const TransferMatrix& second);

/// out_k = sum_m t(k, m) in_m.
FieldVector apply(const TransferMatrix& t, const FieldVector& input);

/// Element-wise |E|^2.
std::vector<Intensity> intensities(const FieldVector& field);

}  // namespace twophoton
