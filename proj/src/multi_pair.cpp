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

#include "qpt/multi_pair.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

void require_full_rank(const BipartiteState &pair, const char *name) {
  if (!pair.is_pure()) {
    throw std::invalid_argument(std::string(name) + " must be a pure state");
  }
  const Faithfulness f = faithfulness_check(pair);
  if (!f.full_rank) {
    throw UnfaithfulInputError(std::string(name) + " is not full rank", f.condition_number);
  }
}

}  // namespace

ComplexMatrix two_pair_coefficients(const BipartiteState &pair1, const BipartiteState &pair2) {
  return tensor(pair1.coeffs(), pair2.coeffs());
}

ComplexMatrix two_pair_output_density(const QuantumChannel &device, const BipartiteState &pair1,
                                      const BipartiteState &pair2) {
  if (device.dim() != 4) {
    throw std::invalid_argument("two_pair_output_density: device must act on two qubits");
  }
  const ComplexVector in = vec(two_pair_coefficients(pair1, pair2));
  const ComplexMatrix rho_in = in * in.adjoint();
  const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
  ComplexMatrix out = ComplexMatrix::Zero(16, 16);
  for (const auto &k : device.kraus()) {
    const ComplexMatrix kk = tensor(k, id);
    out += kk * rho_in * kk.adjoint();
  }
  const double prob = out.trace().real();
  if (prob < kNullEventFloor) {
    throw NullEventError("two_pair_output_density: output probability is numerically zero", prob);
  }
  return out / prob;
}

ReconstructionResult reconstruct_two_qubit_device(const PauliTensor &tensor,
                                                  const BipartiteState &pair1,
                                                  const BipartiteState &pair2,
                                                  const ReconstructionOptions &options) {
  if (tensor.parties() != 4) {
    throw std::invalid_argument("reconstruct_two_qubit_device: need a 4-party tensor");
  }
  require_full_rank(pair1, "pair 1");
  require_full_rank(pair2, "pair 2");
  const ComplexMatrix psi = two_pair_coefficients(pair1, pair2);

  ReconstructionResult r{};
  r.kind = ReconstructionKind::kDeviceChoi;
  r.matrix = choi_from_output_density(density_from_pauli_tensor(tensor), psi);
  r.gauge = "none (Choi matrix is phase free); trace normalized to 4";
  r.condition_number = condition_number(psi);
  HermitianEigen eig = eigen_hermitian(r.matrix);
  r.negativity = std::max(0.0, -eig.values.minCoeff());
  if (options.project_psd) {
    const RealVector clipped = eig.values.cwiseMax(0.0);
    r.matrix = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    eig.values = clipped;
  }
  r.choi_eigenvalues = eig.values;
  r.error_re = RealMatrix::Zero(16, 16);
  r.error_im = RealMatrix::Zero(16, 16);
  return r;
}

ComplexMatrix two_qubit_gate(std::string_view name) {
  ComplexMatrix u = ComplexMatrix::Zero(4, 4);
  if (name == "cnot") {
    u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
  } else if (name == "swap") {
    u(0, 0) = u(1, 2) = u(2, 1) = u(3, 3) = 1.0;
  } else if (name == "identity") {
    u.setIdentity();
  } else {
    throw std::invalid_argument("unknown two-qubit gate '" + std::string(name) + "'");
  }
  return u;
}

}  // namespace qpt
