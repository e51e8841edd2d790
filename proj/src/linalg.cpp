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

#include "qpt/linalg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
  }
}

void require_square(const ComplexMatrix &m, const char *op) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw std::invalid_argument(std::string(op) + ": matrix must be square and non-empty");
  }
}

}  // namespace

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  require_same_shape(a, b, "approx_equal");
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool approx_equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b, double tol) {
  require_same_shape(a, b, "approx_equal_up_to_phase");
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) == 0.0) {
    return approx_equal(a, b, tol);
  }
  const Complex phase = overlap / std::abs(overlap);
  return approx_equal(a, phase * b, tol);
}

ComplexMatrix dagger(const ComplexMatrix &m) { return m.adjoint(); }

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, int traced, int dim_a, int dim_b) {
  if (m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b) {
    throw std::invalid_argument("partial_trace: dimension mismatch");
  }
  if (traced == 1) {
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int k = 0; k < dim_a; ++k) {
      out += m.block(k * dim_b, k * dim_b, dim_b, dim_b);
    }
    return out;
  }
  if (traced == 2) {
    ComplexMatrix out(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
      }
    }
    return out;
  }
  throw std::invalid_argument("partial_trace: subsystem must be 1 or 2");
}

Complex det(const ComplexMatrix &m) {
  require_square(m, "det");
  return m.determinant();
}

ComplexMatrix inverse(const ComplexMatrix &m, double tol) {
  require_square(m, "inverse");
  const Complex d = m.determinant();
  if (std::abs(d) < tol) {
    throw SingularMatrixError("inverse: |det| = " + std::to_string(std::abs(d)) +
                              " below invertibility threshold");
  }
  return m.fullPivLu().inverse();
}

HermitianEigen eigen_hermitian(const ComplexMatrix &m, double tol) {
  require_square(m, "eigen_hermitian");
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol) {
    throw std::invalid_argument("eigen_hermitian: input not Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_hermitian: eigensolver failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector singular_values(const ComplexMatrix &m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

double condition_number(const ComplexMatrix &m) {
  const RealVector sv = singular_values(m);
  const double smin = sv(sv.size() - 1);
  if (smin == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return sv(0) / smin;
}

double trace_norm(const ComplexMatrix &m) { return singular_values(m).sum(); }

bool is_unitary(const ComplexMatrix &m, double tol) {
  if (m.rows() != m.cols()) {
    return false;
  }
  const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
  return approx_equal(m.adjoint() * m, id, tol);
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

ComplexVector vec(const ComplexMatrix &m) {
  ComplexVector v(m.rows() * m.cols());
  for (Eigen::Index n = 0; n < m.rows(); ++n) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      v(n * m.cols() + k) = m(n, k);
    }
  }
  return v;
}

ComplexMatrix unvec(const ComplexVector &v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols) {
    throw std::invalid_argument("unvec: size mismatch");
  }
  ComplexMatrix m(rows, cols);
  for (int n = 0; n < rows; ++n) {
    for (int k = 0; k < cols; ++k) {
      m(n, k) = v(n * cols + k);
    }
  }
  return m;
}

}  // namespace qpt
