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

#ifndef QPT_TOMOGRAPHY_HPP
#define QPT_TOMOGRAPHY_HPP

#include <array>
#include <optional>
#include <string>

#include "qpt/experiment.hpp"
#include "qpt/linalg.hpp"
#include "qpt/state.hpp"

namespace qpt {

/// Product basis ket |n m> used to normalize the pure-state estimator.
struct BasisPair {
  int n;
  int m;
  std::string label() const { return std::to_string(n) + std::to_string(m); }
  friend bool operator==(const BasisPair &, const BasisPair &) = default;
};

/// Order tried when the caller lets the estimator pick the reference.
inline constexpr std::array<BasisPair, 4> kReferenceOrder{{{0, 1}, {1, 0}, {1, 1}, {0, 0}}};

/// Default floor on |Psi_ref|^2.
inline constexpr double kReferenceFloor = 1e-6;

/// Q^{ij}_{nm} = <n|sigma_i|a><m|sigma_j|b> for reference |ab>.
Complex q_tensor(int n, int m, int i, int j, BasisPair reference = {0, 1});

/// |Psi_ab|^2 = (1 + (-1)^a s3(1) + (-1)^b s3(2) + (-1)^{a+b} s3(1)s3(2)) / 4,
/// the fraction of z-z events landing on |ab>. Throws
/// DegenerateReferenceError below `floor`.
double estimate_p(const CorrelationTable &table, BasisPair reference = {0, 1},
                  double floor = kReferenceFloor);

enum class ReconstructionKind { kInputState, kDeviceUnitary, kDeviceChoi };

std::string to_string(ReconstructionKind kind);

struct ReconstructionOptions {
  /// nullopt: try kReferenceOrder until one clears the floor.
  std::optional<BasisPair> reference;
  double reference_floor = kReferenceFloor;
  /// Clip negative Choi eigenvalues (nearest PSD matrix in Frobenius norm).
  bool project_psd = false;
};

struct ReconstructionResult {
  ReconstructionKind kind;
  ComplexMatrix matrix;
  /// Per-element standard deviations of real and imaginary parts; zero
  /// until filled in by bootstrap_errors.
  RealMatrix error_re;
  RealMatrix error_im;
  std::string gauge;

  // Pure-state stage (input_state, device_unitary).
  std::optional<BasisPair> reference;
  std::optional<double> p;
  /// Sum |M_nm|^2 of the raw state estimate; 1 for exact data.
  std::optional<double> state_norm;

  /// Condition number of Psi: the estimate for input_state, the supplied
  /// input otherwise.
  std::optional<double> condition_number;

  std::optional<double> unitarity_deviation;  // ||U^dag U - I||_F
  std::optional<RealVector> choi_eigenvalues;  // ascending
  std::optional<double> negativity;            // max(0, -min eigenvalue)
  /// Occurrence probability of the device. Coincidence-normalized data
  /// cannot determine it, so Choi results leave it empty.
  std::optional<double> occurrence_probability;

  /// Against a ground truth when the caller supplies one.
  std::optional<double> fidelity;
  std::optional<double> choi_distance;
};

/// Pure-state estimator Psi_nm = sum_ij Q^{ij}_{nm} s_ij / (4 sqrt p); the
/// reference element comes out real non-negative. Not renormalized.
ReconstructionResult reconstruct_state(const CorrelationTable &table,
                                       const ReconstructionOptions &options = {});

/// U = M Psi^{-1} with M the state estimate of U Psi. Throws
/// UnfaithfulInputError if Psi is not full rank.
ReconstructionResult reconstruct_unitary(const CorrelationTable &table, const BipartiteState &input,
                                         const ReconstructionOptions &options = {});

/// Linear-inversion state tomography followed by
/// C = (I (x) (Psi^T)^{-1}) rho (I (x) (Psi^*)^{-1}), hermitized and scaled to
/// Tr C = 2.
ReconstructionResult reconstruct_choi(const CorrelationTable &table, const BipartiteState &input,
                                      const ReconstructionOptions &options = {});

/// rho = sum_ij s_ij sigma_i (x) sigma_j / 4.
ComplexMatrix density_from_table(const CorrelationTable &table);

/// Choi matrix of the channel that maps the pure input with coefficient
/// matrix `psi` (d x d) to `rho` on the first factor. Hermitized, trace d.
ComplexMatrix choi_from_output_density(const ComplexMatrix &rho, const ComplexMatrix &psi);

/// Multiplies by a global phase so det U is real positive (when
/// |det U| > 1e-8), then picks the sign that makes the element with the
/// largest |Re| positive (largest |Im| if all real parts vanish). Below the
/// det threshold, the largest-magnitude element is made real positive.
ComplexMatrix fix_unitary_gauge(const ComplexMatrix &u);

/// |Tr(A^dag B)| / (||A||_F ||B||_F); equals |Tr(A^dag B)|/2 for 2x2
/// unitaries. Global-phase invariant, in [0, 1].
double fidelity_unitary(const ComplexMatrix &a, const ComplexMatrix &b);

/// Trace distance between the unit-trace normalized Choi matrices.
double distance_choi(const ComplexMatrix &c1, const ComplexMatrix &c2);

struct Faithfulness {
  bool full_rank;
  double condition_number;
};

/// Pure states only.
Faithfulness faithfulness_check(const BipartiteState &psi);

}  // namespace qpt

#endif  // QPT_TOMOGRAPHY_HPP
