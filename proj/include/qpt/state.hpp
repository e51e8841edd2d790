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

#ifndef QPT_STATE_HPP
#define QPT_STATE_HPP

#include <optional>

#include "qpt/linalg.hpp"
#include "qpt/pauli.hpp"

namespace qpt {

/// Smallest singular value of Psi for the input to count as full rank.
inline constexpr double kFullRankFloor = 1e-7;

/// State of two qubits, ordered |00>, |01>, |10>, |11>; subsystem 1 is the
/// beam that traverses the device.
///
/// A pure state is stored as its double-ket coefficient matrix,
/// |Psi>> = sum_nm Psi_nm |n>|m>. A mixed state is stored as a 4x4 density
/// matrix. Instances are immutable and validated on construction.
class BipartiteState {
 public:
  /// Requires a 2x2 matrix with sum |Psi_nm|^2 = 1 within tol.equality.
  static BipartiteState pure(const ComplexMatrix &coeffs, const Tolerances &tol = kTol);
  /// Rescales coeffs to unit norm first.
  static BipartiteState pure_normalized(const ComplexMatrix &coeffs);
  /// Requires a 4x4 Hermitian, unit-trace, positive semidefinite matrix.
  static BipartiteState mixed(const ComplexMatrix &density, const Tolerances &tol = kTol);

  bool is_pure() const { return coeffs_.has_value(); }

  /// Throws std::logic_error for a mixed state.
  const ComplexMatrix &coeffs() const;
  /// |Psi>><<Psi| for pure states.
  const ComplexMatrix &density() const { return density_; }

  /// Pure only; smallest singular value of Psi above kFullRankFloor.
  bool full_rank() const;

  /// <A (x) B>, A on subsystem 1. Pure states use Tr[Psi^dag A Psi B^T].
  double expectation(const ComplexMatrix &a, const ComplexMatrix &b) const;

 private:
  BipartiteState(std::optional<ComplexMatrix> coeffs, ComplexMatrix density)
      : coeffs_(std::move(coeffs)), density_(std::move(density)) {}

  std::optional<ComplexMatrix> coeffs_;
  ComplexMatrix density_;
};

/// Psi = sigma_j / sqrt(2).
BipartiteState bell_state(PauliIndex j);

/// (|01> + |10>)/sqrt(2), i.e. bell_state(x).
BipartiteState triplet_state();

/// I/4.
BipartiteState maximally_mixed_state();

}  // namespace qpt

#endif  // QPT_STATE_HPP
