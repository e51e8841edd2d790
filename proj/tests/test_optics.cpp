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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qpt/linalg.hpp"
#include "qpt/optics.hpp"
#include "qpt/pauli.hpp"

using namespace qpt;
using std::numbers::pi;

namespace {

// Single plate (0.45 pi, -0.138 pi), evaluated from the rotated-retarder form
// R(theta) diag(1, e^{i phi}) R(theta)^T with numpy.
ComplexMatrix frozen_single_plate() {
  ComplexMatrix w(2, 2);
  w << Complex(0.8511342867052335, 0.17429935582021103),
      Complex(-0.3215851123387208, 0.3765277892500435),
      Complex(-0.3215851123387208, 0.3765277892500435),
      Complex(0.3053001783349974, 0.8133889847749266);
  return w;
}

// (pi, 0.29 pi) applied after the plate above, same oracle.
ComplexMatrix frozen_two_plate_stack() {
  ComplexMatrix w(2, 2);
  w << Complex(-0.5231504144038076, 0.32135198923274716),
      Complex(0.37568357712626016, 0.694196220677481),
      Complex(0.7444193726605042, 0.26246207446604947),
      Complex(-0.23555685777940372, 0.5669800912093943);
  return w;
}

bool in_so3(const RealMatrix &r, double tol) {
  return (r.transpose() * r - RealMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < tol &&
         std::abs(r.determinant() - 1.0) < tol;
}

}  // namespace

TEST(WavePlate, jones_examples) {
  EXPECT_TRUE(approx_equal(waveplate_jones(WavePlate(pi, 0)), pauli(3)));
  EXPECT_TRUE(approx_equal(waveplate_jones(WavePlate(0, 0.731)), ComplexMatrix::Identity(2, 2)));
  EXPECT_TRUE(approx_equal(waveplate_jones(WavePlate::from_units_of_pi(0.45, -0.138)),
                           frozen_single_plate(), 1e-14));
}

TEST(WavePlate, phase_reduced_mod_two_pi) {
  EXPECT_NEAR(WavePlate(2 * pi + 0.3, 0).phi(), 0.3, 1e-14);
  EXPECT_NEAR(WavePlate(-0.3, 0).phi(), 2 * pi - 0.3, 1e-14);
  EXPECT_THROW(WavePlate(std::nan(""), 0), std::invalid_argument);
  EXPECT_THROW(WavePlate(0, INFINITY), std::invalid_argument);
}

TEST(WavePlate, matches_rotated_retarder) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2 * pi, 2 * pi);
  for (int k = 0; k < 200; ++k) {
    const double phi = u(rng), theta = u(rng);
    ASSERT_TRUE(approx_equal(waveplate_jones(WavePlate(phi, theta)),
                             qpt::testing::rotated_retarder(phi, theta), 1e-12));
  }
}

TEST(Bloch, examples) {
  // Half-wave at pi/8 swaps x and z, flips y.
  RealMatrix swap(3, 3);
  swap << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  EXPECT_TRUE((waveplate_bloch(WavePlate(pi, pi / 8)) - swap).cwiseAbs().maxCoeff() < 1e-12);
  EXPECT_TRUE((waveplate_bloch(WavePlate(0, 1.1)) - RealMatrix::Identity(3, 3))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
  // Quarter-wave at pi/4: z -> -y, y -> +z.
  const RealMatrix q = waveplate_bloch(WavePlate(pi / 2, pi / 4));
  EXPECT_NEAR(q(0, 2), 0.0, 1e-12);
  EXPECT_NEAR(q(1, 2), -1.0, 1e-12);
  EXPECT_NEAR(q(2, 2), 0.0, 1e-12);
  EXPECT_NEAR(q(2, 1), 1.0, 1e-12);
}

// The rotation is Rodrigues about (s, 0, c) by phi.
TEST(Bloch, rodrigues_form) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 2 * pi);
  for (int k = 0; k < 100; ++k) {
    const double phi = u(rng), theta = u(rng);
    const Eigen::Vector3d axis(std::sin(2 * theta), 0, std::cos(2 * theta));
    const Eigen::Matrix3d expected = qpt::testing::rodrigues(axis, phi);
    ASSERT_LT((waveplate_bloch(WavePlate(phi, theta)) - expected).cwiseAbs().maxCoeff(), 1e-12);
  }
}

// Row x, column y: the derived entry is -c sin(phi); -c cos(phi) as printed in
// the closed form would break orthogonality.
TEST(Bloch, xy_entry_regression) {
  const double phi = 0.45 * pi, theta = -0.138 * pi;
  const double c = std::cos(2 * theta);
  const RealMatrix r = waveplate_bloch(WavePlate(phi, theta));
  EXPECT_NEAR(r(0, 1), -c * std::sin(phi), 1e-12);
  EXPECT_GT(std::abs(r(0, 1) - (-c * std::cos(phi))), 0.1);

  RealMatrix printed = r;
  printed(0, 1) = -c * std::cos(phi);
  EXPECT_FALSE(in_so3(printed, 1e-3));
}

TEST(Bloch, random_plates_group_properties) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int k = 0; k < 1000; ++k) {
    const WavePlate p1(u(rng), u(rng)), p2(u(rng), u(rng));
    const ComplexMatrix w1 = waveplate_jones(p1);
    ASSERT_TRUE(is_unitary(w1, 1e-12));
    ASSERT_TRUE(in_so3(waveplate_bloch(p1), 1e-12));
    const QuantumChannel dev = compile_device({{p1, p2}, ""});
    const RealMatrix lhs = bloch_rotation(dev.unitary_matrix());
    const RealMatrix rhs = waveplate_bloch(p2) * waveplate_bloch(p1);
    ASSERT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Bloch, rotates_expectation_vector) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-pi, pi);
  std::normal_distribution<double> g;
  for (int k = 0; k < 200; ++k) {
    const WavePlate p(u(rng), u(rng));
    ComplexVector v(2);
    v << Complex(g(rng), g(rng)), Complex(g(rng), g(rng));
    v.normalize();
    const ComplexMatrix rho = v * v.adjoint();
    const ComplexMatrix w = waveplate_jones(p);
    const ComplexMatrix out = w * rho * w.adjoint();
    Eigen::Vector3d before, after;
    for (int a = 1; a <= 3; ++a) {
      before(a - 1) = (pauli(a) * rho).trace().real();
      after(a - 1) = (pauli(a) * out).trace().real();
    }
    ASSERT_LT((waveplate_bloch(p) * before - after).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(CompileDevice, examples) {
  EXPECT_TRUE(approx_equal(compile_device({{WavePlate(pi, 0)}, ""}).unitary_matrix(), pauli(3)));
  const DeviceSpec stack{{WavePlate::from_units_of_pi(0.45, -0.138), WavePlate::from_units_of_pi(1, 0.29)},
                         "stack"};
  EXPECT_TRUE(approx_equal(compile_device(stack).unitary_matrix(), frozen_two_plate_stack(), 1e-14));
  const DeviceSpec twice{{WavePlate(pi, 0.3), WavePlate(pi, 0.3)}, ""};
  EXPECT_TRUE(approx_equal_up_to_phase(compile_device(twice).unitary_matrix(),
                                       ComplexMatrix::Identity(2, 2)));
  EXPECT_THROW(compile_device({{}, "empty"}), std::invalid_argument);
}

TEST(CompileDevice, order_matters) {
  const WavePlate a = WavePlate::from_units_of_pi(0.45, -0.138);
  const WavePlate b = WavePlate::from_units_of_pi(1, 0.29);
  const ComplexMatrix ab = compile_device({{a, b}, ""}).unitary_matrix();
  const ComplexMatrix ba = compile_device({{b, a}, ""}).unitary_matrix();
  EXPECT_TRUE(approx_equal(ab, waveplate_jones(b) * waveplate_jones(a)));
  EXPECT_FALSE(approx_equal_up_to_phase(ab, ba, 1e-6));
}

TEST(PlateText, round_trip) {
  const DeviceSpec stack{{WavePlate::from_units_of_pi(0.45, -0.138), WavePlate::from_units_of_pi(1, 0.29)},
                         ""};
  EXPECT_EQ(format_plates(stack), "0.45:-0.138, 1:0.29");
  const DeviceSpec back = parse_plates("0.45:-0.138, 1:0.29");
  ASSERT_EQ(back.plates.size(), 2u);
  EXPECT_TRUE(approx_equal(compile_device(back).unitary_matrix(),
                           compile_device(stack).unitary_matrix(), 1e-15));
  EXPECT_THROW(parse_plates(""), std::invalid_argument);
  EXPECT_THROW(parse_plates("0.45"), std::invalid_argument);
  EXPECT_THROW(parse_plates("0.45:abc"), std::invalid_argument);
}

TEST(Detector, prescribed_plates) {
  const PauliDetector z = detector_for(PauliIndex(3));
  EXPECT_FALSE(z.pre_plate.has_value());
  EXPECT_TRUE(approx_equal(z.hardware_observable(), pauli(3)));

  const PauliDetector x = detector_for(PauliIndex(1));
  ASSERT_TRUE(x.pre_plate.has_value());
  EXPECT_NEAR(x.pre_plate->phi(), pi, 1e-15);
  EXPECT_NEAR(x.pre_plate->theta(), pi / 8, 1e-15);
  EXPECT_EQ(x.sign, 1);
  EXPECT_TRUE(approx_equal(x.hardware_observable(), pauli(1)));

  const PauliDetector y = detector_for(PauliIndex(2));
  ASSERT_TRUE(y.pre_plate.has_value());
  EXPECT_NEAR(y.pre_plate->phi(), pi / 2, 1e-15);
  EXPECT_NEAR(y.pre_plate->theta(), pi / 4, 1e-15);
  EXPECT_TRUE(approx_equal(y.hardware_observable(), y.sign * pauli(2)));
  EXPECT_EQ(y.sign, 1);

  EXPECT_THROW(detector_for(PauliIndex(0)), std::invalid_argument);
}

TEST(Detector, outcome_probabilities_match_expectation) {
  std::mt19937_64 rng(12);
  for (int axis = 1; axis <= 3; ++axis) {
    const PauliDetector d = detector_for(PauliIndex(axis));
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix rho = qpt::testing::random_density(rng);
      const double mean = (qpt::testing::sigma(axis) * rho).trace().real();
      const auto [plus, minus] = d.outcome_probabilities(rho);
      ASSERT_NEAR(plus, (1 + mean) / 2, 1e-12);
      ASSERT_NEAR(minus, (1 - mean) / 2, 1e-12);
    }
  }
}

TEST(Detector, quarter_wave_makes_circular_light) {
  ComplexVector h(2);
  h << 1, 0;
  const ComplexVector out = waveplate_jones(WavePlate(pi / 2, pi / 4)) * h;
  EXPECT_NEAR(std::abs(out(0)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(out(1)), 1 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::abs(std::arg(out(1) / out(0))), pi / 2, 1e-12);
  EXPECT_NEAR(std::abs(out(0) - Complex(0.5, 0.5)), 0.0, 1e-12);
}
