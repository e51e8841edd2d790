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

#include "qpt/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/pauli.hpp"

namespace qpt {

namespace {

int dim_from_choi(const ComplexMatrix &choi) {
  const auto d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(choi.rows()))));
  if (choi.rows() != choi.cols() || d * d != choi.rows() || d == 0) {
    throw std::invalid_argument("Choi matrix must be d^2 x d^2");
  }
  return d;
}

void require_density(const ComplexMatrix &rho, int dim) {
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("apply_channel: density matrix dimension mismatch");
  }
  if (!is_hermitian(rho, kTol.psd_slack)) {
    throw std::invalid_argument("apply_channel: density matrix not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > kTol.psd_slack) {
    throw std::invalid_argument("apply_channel: density matrix trace != 1");
  }
  if (eigen_hermitian(rho).values.minCoeff() < -kTol.psd_slack) {
    throw std::invalid_argument("apply_channel: density matrix not positive");
  }
}

}  // namespace

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus, ComplexMatrix choi, bool unitary)
    : kraus_(std::move(kraus)), choi_(std::move(choi)), unitary_(unitary) {
  occurrence_scale_ = choi_.trace().real() / dim();
}

QuantumChannel QuantumChannel::from_kraus(std::vector<ComplexMatrix> ops, const Tolerances &tol) {
  if (ops.empty()) {
    throw std::invalid_argument("QuantumChannel: empty Kraus list");
  }
  const auto d = ops.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto &k : ops) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("QuantumChannel: Kraus operators must be square and equal-sized");
    }
    sum += k.adjoint() * k;
  }
  const double max_eig = eigen_hermitian(sum, tol.psd_slack).values.maxCoeff();
  if (max_eig > 1.0 + tol.psd_slack) {
    throw std::invalid_argument("QuantumChannel: sum K^dag K exceeds identity (eigenvalue " +
                                std::to_string(max_eig) + ")");
  }
  const bool unitary = ops.size() == 1 && qpt::is_unitary(ops.front(), tol.equality);
  ComplexMatrix choi = choi_from_kraus(ops);
  return QuantumChannel(std::move(ops), std::move(choi), unitary);
}

QuantumChannel QuantumChannel::from_choi(const ComplexMatrix &choi, const Tolerances &tol) {
  return from_kraus(kraus_from_choi(choi, tol), tol);
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix &u, const Tolerances &tol) {
  if (!qpt::is_unitary(u, tol.equality)) {
    throw std::invalid_argument("QuantumChannel::unitary: matrix is not unitary");
  }
  return from_kraus({u}, tol);
}

QuantumChannel QuantumChannel::identity(int dim) {
  return unitary(ComplexMatrix::Identity(dim, dim));
}

QuantumChannel QuantumChannel::depolarizing(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("depolarizing: p must lie in [0, 1]");
  }
  const double a = std::sqrt(1.0 - 3.0 * p / 4.0);
  const double b = std::sqrt(p / 4.0);
  return from_kraus({a * pauli(0), b * pauli(1), b * pauli(2), b * pauli(3)});
}

QuantumChannel QuantumChannel::amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("amplitude_damping: gamma must lie in [0, 1]");
  }
  ComplexMatrix k0(2, 2), k1(2, 2);
  k0 << 1, 0, 0, std::sqrt(1.0 - gamma);
  k1 << 0, std::sqrt(gamma), 0, 0;
  return from_kraus({k0, k1});
}

const ComplexMatrix &QuantumChannel::unitary_matrix() const {
  if (!unitary_) {
    throw std::logic_error("QuantumChannel::unitary_matrix: channel is not unitary");
  }
  return kraus_.front();
}

ComplexMatrix QuantumChannel::apply_unnormalized(const ComplexMatrix &rho) const {
  ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
  for (const auto &k : kraus_) {
    out += k * rho * k.adjoint();
  }
  return out;
}

ChannelOutput apply_channel(const QuantumChannel &channel, const ComplexMatrix &rho) {
  require_density(rho, channel.dim());
  const ComplexMatrix out = channel.apply_unnormalized(rho);
  const double prob = out.trace().real();
  if (prob < kNullEventFloor) {
    throw NullEventError("apply_channel: outcome probability " + std::to_string(prob) +
                             " is numerically zero",
                         prob);
  }
  return {out / prob, prob};
}

BipartiteState propagate(const QuantumChannel &channel, const BipartiteState &state) {
  if (channel.dim() != 2) {
    throw std::invalid_argument("propagate: channel must act on one qubit");
  }
  if (channel.is_unitary() && state.is_pure()) {
    return BipartiteState::pure(channel.unitary_matrix() * state.coeffs());
  }
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  ComplexMatrix out = ComplexMatrix::Zero(4, 4);
  for (const auto &k : channel.kraus()) {
    const ComplexMatrix kk = tensor(k, id);
    out += kk * state.density() * kk.adjoint();
  }
  const double prob = out.trace().real();
  if (prob < kNullEventFloor) {
    throw NullEventError("propagate: output probability " + std::to_string(prob) +
                             " is numerically zero",
                         prob);
  }
  return BipartiteState::mixed(out / prob);
}

ComplexMatrix choi_from_kraus(std::span<const ComplexMatrix> ops) {
  if (ops.empty()) {
    throw std::invalid_argument("choi_from_kraus: empty Kraus list");
  }
  const auto d = ops.front().rows();
  ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
  for (const auto &k : ops) {
    if (k.rows() != d || k.cols() != d) {
      throw std::invalid_argument("choi_from_kraus: Kraus operators must be square and equal-sized");
    }
    const ComplexVector v = vec(k);
    choi += v * v.adjoint();
  }
  return choi;
}

std::vector<ComplexMatrix> kraus_from_choi(const ComplexMatrix &choi, const Tolerances &tol) {
  const int d = dim_from_choi(choi);
  const HermitianEigen eig = eigen_hermitian(choi, tol.psd_slack);
  const double min_eig = eig.values.minCoeff();
  if (min_eig < -tol.psd_slack) {
    throw NotCompletelyPositiveError(
        "kraus_from_choi: Choi matrix not completely positive (eigenvalue " +
            std::to_string(min_eig) + ")",
        -min_eig);
  }
  std::vector<ComplexMatrix> ops;
  for (Eigen::Index k = eig.values.size() - 1; k >= 0; --k) {
    const double lambda = eig.values(k);
    if (lambda <= tol.psd_slack) {
      continue;
    }
    ops.push_back(std::sqrt(lambda) * unvec(eig.vectors.col(k), d, d));
  }
  if (ops.empty()) {
    throw std::invalid_argument("kraus_from_choi: Choi matrix is zero");
  }
  return ops;
}

}  // namespace qpt
