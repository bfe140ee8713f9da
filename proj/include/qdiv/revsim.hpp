// Copyright 2026 The qdiv Authors
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
#include <cstdint>
#include <span>
#include <vector>

#include "qdiv/circuit.hpp"

namespace qdiv {

/// Packed computational basis state; bit i is qubit i.
class BasisState {
 public:
  BasisState() = default;
  explicit BasisState(std::size_t width)
      : width_(width), words_((width + 63) / 64, 0) {}

  /// Low bits of `value` placed on qubits 0..63 (truncated to width).
  static BasisState from_index(std::size_t width, std::uint64_t value);

  std::size_t width() const noexcept { return width_; }

  bool get(std::size_t q) const { return (words_[q >> 6] >> (q & 63)) & 1U; }
  void set(std::size_t q, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (q & 63);
    if (v) {
      words_[q >> 6] |= mask;
    } else {
      words_[q >> 6] &= ~mask;
    }
  }
  void flip(std::size_t q) { words_[q >> 6] ^= std::uint64_t{1} << (q & 63); }

  /// Writes `value` onto `qubits`, LSB first.
  void write(std::span<const Qubit> qubits, std::uint64_t value);
  /// Reads the register formed by `qubits`, LSB first (at most 64 bits).
  std::uint64_t read(std::span<const Qubit> qubits) const;

  /// Basis index for widths up to 64.
  std::uint64_t to_index() const;

  friend bool operator==(const BasisState &, const BasisState &) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

using Amplitude = std::complex<double>;

struct StateVector {
  std::vector<Amplitude> amplitudes;

  std::size_t width() const noexcept;
  double norm_squared() const;
};

/// Row-major dense complex matrix.
struct Matrix {
  std::size_t dim = 0;
  std::vector<Amplitude> data;

  Amplitude &operator()(std::size_t row, std::size_t col) {
    return data[row * dim + col];
  }
  const Amplitude &operator()(std::size_t row, std::size_t col) const {
    return data[row * dim + col];
  }
};

inline constexpr std::size_t kDefaultStateVectorWidthLimit = 14;
inline constexpr std::size_t kUnitaryWidthLimit = 6;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kNormTolerance = 1e-10;

/// Applies a permutation gate to a basis index (width <= 64).
std::uint64_t permute_index(const Gate &gate, std::uint64_t index);

/// Truth-table simulation. Cost is linear in the gate count. Throws
/// NonPermutationGate on H/T/Tdg/S/Sdg and WidthMismatch if the input width
/// differs from the circuit width.
BasisState run_basis(const Circuit &circuit, BasisState state);

/// Dense simulation; throws WidthLimitExceeded above `width_limit`.
StateVector run_statevector(const Circuit &circuit, const BasisState &input,
                            std::size_t width_limit = kDefaultStateVectorWidthLimit);

/// Column j is the output of run_statevector on basis input j.
Matrix unitary_of(const Circuit &circuit);

double max_abs_difference(const Matrix &lhs, const Matrix &rhs);

/// Exact unitary comparison without global-phase normalisation.
bool check_equivalence(const Circuit &lhs, const Circuit &rhs,
                       double tolerance = kUnitaryTolerance);

}  // namespace qdiv
