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

#include "twophoton/optics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twophoton {

namespace {

void check_index(std::size_t n, std::size_t i, const char* what) {
  if (i >= n) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                            " out of range for " + std::to_string(n) + " modes");
  }
}

bool finite(const Amplitude& a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

}  // namespace

Intensity::Intensity(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw std::invalid_argument("intensity must be finite and nonnegative, got " +
                                std::to_string(value));
  }
}

FieldVector::FieldVector(std::size_t modes) : modes_(modes) {
  if (modes == 0) throw std::invalid_argument("field vector needs at least one mode");
}

FieldVector::FieldVector(std::initializer_list<Amplitude> amplitudes)
    : FieldVector(std::vector<Amplitude>(amplitudes)) {}

FieldVector::FieldVector(std::vector<Amplitude> amplitudes)
    : modes_(std::move(amplitudes)) {
  if (modes_.empty()) throw std::invalid_argument("field vector needs at least one mode");
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    if (!finite(modes_[k])) {
      throw std::invalid_argument("non-finite amplitude in mode " + std::to_string(k));
    }
  }
}

double FieldVector::total_intensity() const {
  double total = 0.0;
  for (const auto& a : modes_) total += std::norm(a);
  return total;
}

TransferMatrix TransferMatrix::identity(std::size_t modes) {
  if (modes == 0) throw std::invalid_argument("transfer matrix needs at least one mode");
  const auto n = static_cast<Eigen::Index>(modes);
  return TransferMatrix(Eigen::MatrixXcd::Identity(n, n));
}

double TransferMatrix::unitarity_defect() const {
  const Eigen::MatrixXcd gram = m_.adjoint() * m_;
  const Eigen::MatrixXcd diff = gram - Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return diff.cwiseAbs().maxCoeff();
}

TransferMatrix beam_splitter(std::size_t n, std::size_t i, std::size_t j) {
  check_index(n, i, "beam splitter");
  check_index(n, j, "beam splitter");
  if (i == j) {
    throw std::invalid_argument("beam splitter needs two distinct modes, got " +
                                std::to_string(i) + " twice");
  }
  TransferMatrix t = TransferMatrix::identity(n);
  const double r = 1.0 / std::sqrt(2.0);
  const auto a = static_cast<Eigen::Index>(i);
  const auto b = static_cast<Eigen::Index>(j);
  t.m_(a, a) = r;
  t.m_(b, b) = r;
  t.m_(a, b) = Amplitude(0.0, r);
  t.m_(b, a) = Amplitude(0.0, r);
  return t;
}

TransferMatrix phase_shifter(std::size_t n, std::size_t i, double phi) {
  check_index(n, i, "phase shifter");
  if (!std::isfinite(phi)) throw std::invalid_argument("phase must be finite");
  TransferMatrix t = TransferMatrix::identity(n);
  const auto a = static_cast<Eigen::Index>(i);
  t.m_(a, a) = std::polar(1.0, phi);
  return t;
}

TransferMatrix compose(const TransferMatrix& first, const TransferMatrix& second) {
  if (first.modes() != second.modes()) {
    throw std::invalid_argument("cannot compose " + std::to_string(first.modes()) +
                                "-mode and " + std::to_string(second.modes()) +
                                "-mode networks");
  }
  return TransferMatrix(second.m_ * first.m_);
}

FieldVector apply(const TransferMatrix& t, const FieldVector& input) {
  if (t.modes() != input.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(t.modes()) +
                                "-mode network applied to " +
                                std::to_string(input.size()) + "-mode input");
  }
  const auto n = static_cast<Eigen::Index>(input.size());
  const Eigen::Map<const Eigen::VectorXcd> in(input.amplitudes().data(), n);
  const Eigen::VectorXcd out = t.matrix() * in;
  return FieldVector(std::vector<Amplitude>(out.data(), out.data() + n));
}

std::vector<Intensity> intensities(const FieldVector& field) {
  std::vector<Intensity> out;
  out.reserve(field.size());
  for (const auto& a : field.amplitudes()) out.emplace_back(std::norm(a));
  return out;
}

}  // namespace twophoton
