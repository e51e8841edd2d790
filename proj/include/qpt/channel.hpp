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

#ifndef QPT_CHANNEL_HPP
#define QPT_CHANNEL_HPP

#include <span>
#include <vector>

#include "qpt/linalg.hpp"
#include "qpt/state.hpp"

namespace qpt {

/// Completely positive, trace non-increasing map on a d-level system.
///
/// Both the operator-sum form and the Choi matrix
///   C = sum_k |K_k>><<K_k| = (E (x) I)(|I>><<I|)
/// are kept. C is unnormalized, so Tr C = d for a deterministic channel.
class QuantumChannel {
 public:
  /// Validates square, equal-size operators with sum K^dag K <= I.
  static QuantumChannel from_kraus(std::vector<ComplexMatrix> ops, const Tolerances &tol = kTol);
  static QuantumChannel from_choi(const ComplexMatrix &choi, const Tolerances &tol = kTol);
  static QuantumChannel unitary(const ComplexMatrix &u, const Tolerances &tol = kTol);
  static QuantumChannel identity(int dim = 2);
  /// rho -> (1 - p) rho + p I/2, for p in [0, 1].
  static QuantumChannel depolarizing(double p);
  /// |1> decays to |0> with probability gamma.
  static QuantumChannel amplitude_damping(double gamma);

  int dim() const { return static_cast<int>(kraus_.front().rows()); }
  const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
  const ComplexMatrix &choi() const { return choi_; }
  /// Tr E(I/d); 1 for deterministic channels.
  double occurrence_scale() const { return occurrence_scale_; }

  bool is_unitary() const { return unitary_; }
  /// Throws std::logic_error unless is_unitary().
  const ComplexMatrix &unitary_matrix() const;

  /// E(rho) without normalization.
  ComplexMatrix apply_unnormalized(const ComplexMatrix &rho) const;

 private:
  QuantumChannel(std::vector<ComplexMatrix> kraus, ComplexMatrix choi, bool unitary);

  std::vector<ComplexMatrix> kraus_;
  ComplexMatrix choi_;
  double occurrence_scale_;
  bool unitary_;
};

struct ChannelOutput {
  ComplexMatrix rho;   // E(rho) / Tr E(rho)
  double probability;  // Tr E(rho)
};

/// Probabilities below this count as impossible outcomes.
inline constexpr double kNullEventFloor = 1e-15;

/// Throws NullEventError when Tr E(rho) < kNullEventFloor.
ChannelOutput apply_channel(const QuantumChannel &channel, const ComplexMatrix &rho);

/// (E (x) I) applied to the state, normalized. A unitary channel on a pure
/// state returns the pure state with coefficients U Psi.
BipartiteState propagate(const QuantumChannel &channel, const BipartiteState &state);

ComplexMatrix choi_from_kraus(std::span<const ComplexMatrix> ops);

/// Spectral decomposition of the Choi matrix; eigenvalues at or below
/// tol.psd_slack are dropped. Throws NotCompletelyPositiveError when an
/// eigenvalue is below -tol.psd_slack, reporting its magnitude.
std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix &choi, const Tolerances &tol = kTol);

}  // namespace qpt

#endif  // QPT_CHANNEL_HPP
