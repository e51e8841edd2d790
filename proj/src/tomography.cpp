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

#include "qpt/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qpt/errors.hpp"
#include "qpt/pauli.hpp"

namespace qpt {

namespace {

constexpr double kDetGaugeFloor = 1e-8;

void require_reference(BasisPair r) {
  if (r.n < 0 || r.n > 1 || r.m < 0 || r.m > 1) {
    throw std::invalid_argument("reference ket must be one of |00>, |01>, |10>, |11>");
  }
}

ComplexMatrix state_estimate(const CorrelationTable &table, BasisPair ref, double p) {
  const double scale = 1.0 / (4.0 * std::sqrt(p));
  ComplexMatrix psi = ComplexMatrix::Zero(2, 2);
  for (int n = 0; n < 2; ++n) {
    for (int m = 0; m < 2; ++m) {
      Complex acc = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          acc += q_tensor(n, m, i, j, ref) * table(i, j);
        }
      }
      psi(n, m) = scale * acc;
    }
  }
  return psi;
}

const BipartiteState &require_faithful_pure(const BipartiteState &input) {
  if (!input.is_pure()) {
    throw std::invalid_argument("input state must be pure");
  }
  const Faithfulness f = faithfulness_check(input);
  if (!f.full_rank) {
    throw UnfaithfulInputError("input state is not full rank (condition number " +
                                   std::to_string(f.condition_number) + ")",
                               f.condition_number);
  }
  return input;
}

void fill_zero_errors(ReconstructionResult &r) {
  r.error_re = RealMatrix::Zero(r.matrix.rows(), r.matrix.cols());
  r.error_im = RealMatrix::Zero(r.matrix.rows(), r.matrix.cols());
}

}  // namespace

Complex q_tensor(int n, int m, int i, int j, BasisPair reference) {
  require_reference(reference);
  if (n < 0 || n > 1 || m < 0 || m > 1) {
    throw std::invalid_argument("q_tensor: n and m must be 0 or 1");
  }
  const ComplexMatrix si = pauli(i);
  const ComplexMatrix sj = pauli(j);
  return si(n, reference.n) * sj(m, reference.m);
}

double estimate_p(const CorrelationTable &table, BasisPair reference, double floor) {
  require_reference(reference);
  const double sa = reference.n == 0 ? 1.0 : -1.0;
  const double sb = reference.m == 0 ? 1.0 : -1.0;
  const double p = 0.25 * (1.0 + sa * table(3, 0) + sb * table(0, 3) + sa * sb * table(3, 3));
  if (p < floor) {
    throw DegenerateReferenceError("reference |" + reference.label() + "> has p = " +
                                       std::to_string(p) + " below floor " +
                                       std::to_string(floor) +
                                       "; choose another reference (|10>, |11> or |00>)",
                                   p);
  }
  return p;
}

std::string to_string(ReconstructionKind kind) {
  switch (kind) {
    case ReconstructionKind::kInputState:
      return "input_state";
    case ReconstructionKind::kDeviceUnitary:
      return "device_unitary";
    case ReconstructionKind::kDeviceChoi:
      return "device_choi";
  }
  return "unknown";
}

ReconstructionResult reconstruct_state(const CorrelationTable &table,
                                       const ReconstructionOptions &options) {
  BasisPair ref{0, 1};
  double p = 0.0;
  if (options.reference) {
    ref = *options.reference;
    p = estimate_p(table, ref, options.reference_floor);
  } else {
    bool found = false;
    double best_p = 0.0;
    for (const BasisPair candidate : kReferenceOrder) {
      try {
        p = estimate_p(table, candidate, options.reference_floor);
        ref = candidate;
        found = true;
        break;
      } catch (const DegenerateReferenceError &e) {
        best_p = std::max(best_p, e.p());
      }
    }
    if (!found) {
      throw DegenerateReferenceError("every reference ket is below the p floor", best_p);
    }
  }

  ReconstructionResult r{};
  r.kind = ReconstructionKind::kInputState;
  r.matrix = state_estimate(table, ref, p);
  fill_zero_errors(r);
  r.gauge = "Psi_" + ref.label() + " real non-negative";
  r.reference = ref;
  r.p = p;
  r.state_norm = r.matrix.squaredNorm();
  r.condition_number = condition_number(r.matrix);
  return r;
}

ComplexMatrix fix_unitary_gauge(const ComplexMatrix &u) {
  ComplexMatrix out = u;
  const Complex d = det(u);
  if (std::abs(d) > kDetGaugeFloor) {
    const double alpha = std::arg(d) / static_cast<double>(u.rows());
    out *= std::polar(1.0, -alpha);
    Eigen::Index r = 0, c = 0;
    const double max_re = out.real().cwiseAbs().maxCoeff(&r, &c);
    double sign_source = out(r, c).real();
    if (max_re <= kDetGaugeFloor) {
      out.imag().cwiseAbs().maxCoeff(&r, &c);
      sign_source = out(r, c).imag();
    }
    if (sign_source < 0.0) {
      out = -out;
    }
    return out;
  }
  Eigen::Index r = 0, c = 0;
  out.cwiseAbs().maxCoeff(&r, &c);
  const double mag = std::abs(out(r, c));
  if (mag > 0.0) {
    out *= std::conj(out(r, c)) / mag;
  }
  return out;
}

ReconstructionResult reconstruct_unitary(const CorrelationTable &table, const BipartiteState &input,
                                         const ReconstructionOptions &options) {
  const BipartiteState &psi = require_faithful_pure(input);
  ReconstructionResult r = reconstruct_state(table, options);
  const ComplexMatrix u = r.matrix * inverse(psi.coeffs());
  r.kind = ReconstructionKind::kDeviceUnitary;
  r.matrix = fix_unitary_gauge(u);
  r.gauge = std::abs(det(u)) > kDetGaugeFloor
                ? "det(U) real positive, sign by largest real part"
                : "largest-magnitude element real positive";
  r.condition_number = faithfulness_check(psi).condition_number;
  r.unitarity_deviation =
      (r.matrix.adjoint() * r.matrix - ComplexMatrix::Identity(2, 2)).norm();
  r.occurrence_probability = 1.0;
  return r;
}

ComplexMatrix density_from_table(const CorrelationTable &table) {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho += table(i, j) * tensor(pauli(i), pauli(j));
    }
  }
  return rho / 4.0;
}

ComplexMatrix choi_from_output_density(const ComplexMatrix &rho, const ComplexMatrix &psi) {
  const auto d = psi.rows();
  if (psi.cols() != d || rho.rows() != d * d || rho.cols() != d * d) {
    throw std::invalid_argument("choi_from_output_density: dimension mismatch");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix left = tensor(id, inverse(psi.transpose()));
  const ComplexMatrix right = tensor(id, inverse(psi.conjugate()));
  ComplexMatrix choi = left * rho * right;
  choi = 0.5 * (choi + choi.adjoint());
  const double tr = choi.trace().real();
  if (!(std::abs(tr) > 0.0)) {
    throw NullEventError("choi_from_output_density: zero-trace estimate", tr);
  }
  return choi * (static_cast<double>(d) / tr);
}

ReconstructionResult reconstruct_choi(const CorrelationTable &table, const BipartiteState &input,
                                      const ReconstructionOptions &options) {
  const BipartiteState &psi = require_faithful_pure(input);
  ReconstructionResult r{};
  r.kind = ReconstructionKind::kDeviceChoi;
  r.matrix = choi_from_output_density(density_from_table(table), psi.coeffs());
  r.gauge = "none (Choi matrix is phase free); trace normalized to 2";
  r.condition_number = faithfulness_check(psi).condition_number;
  HermitianEigen eig = eigen_hermitian(r.matrix);
  r.negativity = std::max(0.0, -eig.values.minCoeff());
  if (options.project_psd) {
    const RealVector clipped = eig.values.cwiseMax(0.0);
    r.matrix = eig.vectors * clipped.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    eig.values = clipped;
  }
  r.choi_eigenvalues = eig.values;
  fill_zero_errors(r);
  return r;
}

double fidelity_unitary(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("fidelity_unitary: shape mismatch");
  }
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("fidelity_unitary: zero matrix");
  }
  return std::min(1.0, std::abs((a.adjoint() * b).trace()) / (na * nb));
}

double distance_choi(const ComplexMatrix &c1, const ComplexMatrix &c2) {
  if (c1.rows() != c2.rows() || c1.cols() != c2.cols()) {
    throw std::invalid_argument("distance_choi: shape mismatch");
  }
  const Complex t1 = c1.trace();
  const Complex t2 = c2.trace();
  if (std::abs(t1) == 0.0 || std::abs(t2) == 0.0) {
    throw std::invalid_argument("distance_choi: zero-trace input");
  }
  return 0.5 * trace_norm(c1 / t1 - c2 / t2);
}

Faithfulness faithfulness_check(const BipartiteState &psi) {
  const RealVector sv = singular_values(psi.coeffs());
  const double smin = sv(sv.size() - 1);
  return {smin > kFullRankFloor, smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity()};
}

}  // namespace qpt
