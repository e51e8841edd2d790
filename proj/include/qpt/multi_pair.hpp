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

#ifndef QPT_MULTI_PAIR_HPP
#define QPT_MULTI_PAIR_HPP

#include "qpt/channel.hpp"
#include "qpt/multi_party.hpp"
#include "qpt/state.hpp"
#include "qpt/tomography.hpp"

namespace qpt {

// Two-qubit devices probed with one entangled pair per device qubit.
//
// Qubits are ordered (A1, A2, B1, B2): A1 and A2 enter the device, B1 and
// B2 are their untouched partners. With this ordering the joint input is
// the double-ket of the 4x4 matrix Psi1 (x) Psi2, and the 16x16 Choi
// matrix uses the same system-then-ancilla layout as the one-qubit case.

/// Psi1 (x) Psi2 as a (A1A2) x (B1B2) coefficient matrix.
ComplexMatrix two_pair_coefficients(const BipartiteState &pair1, const BipartiteState &pair2);

/// (E (x) I)(|Psi>><<Psi|) normalized, for a channel on (A1, A2).
ComplexMatrix two_pair_output_density(const QuantumChannel &device, const BipartiteState &pair1,
                                      const BipartiteState &pair2);

/// 16x16 Choi estimate (trace 4) from the 4-party Pauli correlation tensor.
/// Throws UnfaithfulInputError if either pair is not full rank.
ReconstructionResult reconstruct_two_qubit_device(const PauliTensor &tensor,
                                                  const BipartiteState &pair1,
                                                  const BipartiteState &pair2,
                                                  const ReconstructionOptions &options = {});

/// Named two-qubit gates in the |q1 q2> basis: "cnot" (control q1),
/// "swap", "identity".
ComplexMatrix two_qubit_gate(std::string_view name);

}  // namespace qpt

#endif  // QPT_MULTI_PAIR_HPP
