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

#include "qpt/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qpt {

BipartiteState BipartiteState::pure(const ComplexMatrix &coeffs, const Tolerances &tol) {
  if (coeffs.rows() != 2 || coeffs.cols() != 2) {
    throw std::invalid_argument("BipartiteState::pure: coefficient matrix must be 2x2");
  }
  const double norm2 = coeffs.squaredNorm();
  if (std::abs(norm2 - 1.0) > tol.equality) {
    throw std::invalid_argument("BipartiteState::pure: sum |Psi_nm|^2 = " +
                                std::to_string(norm2) + ", expected 1");
  }
  const ComplexVector v = vec(coeffs);
  return BipartiteState(coeffs, v * v.adjoint());
}

BipartiteState BipartiteState::pure_normalized(const ComplexMatrix &coeffs) {
  const double norm = coeffs.norm();
  if (norm == 0.0) {
    throw std::invalid_argument("BipartiteState::pure_normalized: zero matrix");
  }
  return pure(coeffs / norm);
}

BipartiteState BipartiteState::mixed(const ComplexMatrix &density, const Tolerances &tol) {
  if (density.rows() != 4 || density.cols() != 4) {
    throw std::invalid_argument("BipartiteState::mixed: density matrix must be 4x4");
  }
  if (!is_hermitian(density, tol.psd_slack)) {
    throw std::invalid_argument("BipartiteState::mixed: density matrix not Hermitian");
  }
  const Complex tr = density.trace();
  if (std::abs(tr - 1.0) > tol.psd_slack) {
    throw std::invalid_argument("BipartiteState::mixed: trace " + std::to_string(tr.real()) +
                                ", expected 1");
  }
  const double min_eig = eigen_hermitian(density, tol.psd_slack).values.minCoeff();
  if (min_eig < -tol.psd_slack) {
    throw std::invalid_argument("BipartiteState::mixed: negative eigenvalue " +
                                std::to_string(min_eig));
  }
  return BipartiteState(std::nullopt, 0.5 * (density + density.adjoint()));
}

const ComplexMatrix &BipartiteState::coeffs() const {
  if (!coeffs_) {
    throw std::logic_error("BipartiteState::coeffs: state is mixed");
  }
  return *coeffs_;
}

bool BipartiteState::full_rank() const {
  const RealVector sv = singular_values(coeffs());
  return sv(1) > kFullRankFloor;
}

double BipartiteState::expectation(const ComplexMatrix &a, const ComplexMatrix &b) const {
  if (coeffs_) {
    const ComplexMatrix &psi = *coeffs_;
    return (psi.adjoint() * a * psi * b.transpose()).trace().real();
  }
  return (density_ * tensor(a, b)).trace().real();
}

BipartiteState bell_state(PauliIndex j) {
  return BipartiteState::pure(pauli(j) / std::sqrt(2.0));
}

BipartiteState triplet_state() { return bell_state(PauliIndex(PauliIndex::kX)); }

BipartiteState maximally_mixed_state() {
  return BipartiteState::mixed(ComplexMatrix::Identity(4, 4) / 4.0);
}

}  // namespace qpt
