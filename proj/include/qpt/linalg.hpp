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

#ifndef QPT_LINALG_HPP
#define QPT_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace qpt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every module.
struct Tolerances {
  double equality = 1e-12;       // element-wise absolute equality
  double psd_slack = 1e-10;      // allowed negative eigenvalue / hermiticity defect
  double invertibility = 1e-14;  // |det| floor for inverse()
};

inline constexpr Tolerances kTol{};

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                  double tol = kTol.equality);

/// True when a = e^{i alpha} b for some alpha, element-wise within tol.
bool approx_equal_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b,
                              double tol = kTol.equality);

ComplexMatrix dagger(const ComplexMatrix &m);

/// Kronecker product; a acts on the first (most significant) factor.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Traces out one factor of a (dim_a*dim_b)-square operator. `traced` is 1
/// for the first factor and 2 for the second.
ComplexMatrix partial_trace(const ComplexMatrix &m, int traced, int dim_a = 2,
                            int dim_b = 2);

Complex det(const ComplexMatrix &m);

/// Throws SingularMatrixError when |det m| < tol.
ComplexMatrix inverse(const ComplexMatrix &m, double tol = kTol.invertibility);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns
};

/// Throws std::invalid_argument unless ||m - m^dagger||_max <= tol.
HermitianEigen eigen_hermitian(const ComplexMatrix &m, double tol = kTol.psd_slack);

/// Descending.
RealVector singular_values(const ComplexMatrix &m);

/// sigma_max / sigma_min, +inf when sigma_min == 0.
double condition_number(const ComplexMatrix &m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &m);

bool is_unitary(const ComplexMatrix &m, double tol = kTol.equality);
bool is_hermitian(const ComplexMatrix &m, double tol = kTol.psd_slack);

/// |M>> = sum_nm M_nm |n>|m>, i.e. row-major flattening.
ComplexVector vec(const ComplexMatrix &m);
ComplexMatrix unvec(const ComplexVector &v, int rows, int cols);

}  // namespace qpt

#endif  // QPT_LINALG_HPP
