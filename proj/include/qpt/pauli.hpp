// Copyright 2026 The qpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPT_PAULI_HPP
#define QPT_PAULI_HPP

#include <span>
#include <string>

#include "qpt/linalg.hpp"

namespace qpt {

/// Tetra-vector index into (sigma_0, sigma_x, sigma_y, sigma_z).
///
/// The computational basis is |0> = horizontal, |1> = vertical polarization,
/// so sigma_z = diag(1, -1) reads +1 on the horizontal arm of a splitter.
class PauliIndex {
 public:
  static constexpr int kIdentity = 0;
  static constexpr int kX = 1;
  static constexpr int kY = 2;
  static constexpr int kZ = 3;

  /// Throws std::invalid_argument outside 0..3.
  explicit PauliIndex(int value);

  int value() const { return value_; }
  bool is_identity() const { return value_ == 0; }

  /// 'I', 'x', 'y' or 'z'.
  char letter() const;
  /// Inverse of letter(); accepts upper or lower case.
  static PauliIndex from_letter(char c);

  friend bool operator==(PauliIndex, PauliIndex) = default;

 private:
  int value_;
};

/// 2x2 Pauli matrix sigma_i.
ComplexMatrix pauli(PauliIndex i);
inline ComplexMatrix pauli(int i) { return pauli(PauliIndex(i)); }

/// sigma_{i_1} (x) sigma_{i_2} (x) ... with i_1 on the most significant factor.
ComplexMatrix pauli_string(std::span<const int> indices);

}  // namespace qpt

#endif  // QPT_PAULI_HPP
