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

#ifndef QPT_OPTICS_HPP
#define QPT_OPTICS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpt/channel.hpp"
#include "qpt/linalg.hpp"
#include "qpt/pauli.hpp"

namespace qpt {

/// Birefringent plate with retardation `phi` and optical-axis orientation
/// `theta` (radians, measured from the horizontal). `phi` is reduced into
/// [0, 2pi) on construction.
class WavePlate {
 public:
  WavePlate(double phi, double theta);
  /// Angles given as multiples of pi.
  static WavePlate from_units_of_pi(double phi_over_pi, double theta_over_pi);

  double phi() const { return phi_; }
  double theta() const { return theta_; }

 private:
  double phi_;
  double theta_;
};

/// Jones matrix W = z+ I + z- (cos 2theta sigma_z + sin 2theta sigma_x),
/// z+- = (1 +- e^{i phi}) / 2, acting on the (h, v) mode amplitudes.
ComplexMatrix waveplate_jones(const WavePlate &plate);

/// Adjoint action of a 2x2 unitary on the Bloch vector:
/// R_ab = Tr[sigma_a W sigma_b W^dag] / 2, so W (n.sigma) W^dag = (R n).sigma.
RealMatrix bloch_rotation(const ComplexMatrix &w);

/// bloch_rotation(waveplate_jones(plate)); a rotation by phi about
/// (sin 2theta, 0, cos 2theta).
RealMatrix waveplate_bloch(const WavePlate &plate);

/// Ordered stack of plates; light traverses them in list order.
struct DeviceSpec {
  std::vector<WavePlate> plates;
  std::string label;
};

/// Unitary channel W_k ... W_2 W_1 (first plate rightmost). The global phase
/// is left as produced by the Jones matrices.
QuantumChannel compile_device(const DeviceSpec &device);

/// "phi_over_pi:theta_over_pi" pairs separated by commas, e.g.
/// "0.45:-0.138, 1:0.29". Angles in multiples of pi.
std::string format_plates(const DeviceSpec &device);
DeviceSpec parse_plates(std::string_view text);

/// Polarizing splitter, optionally preceded by a wave plate. Outcome +1 when
/// the horizontal arm fires, -1 for the vertical arm.
struct PauliDetector {
  PauliIndex axis;
  std::optional<WavePlate> pre_plate;
  /// W^dag sigma_z W = sign * sigma_axis; recorded outcomes are multiplied
  /// by sign so that they estimate +sigma_axis.
  int sign;

  /// Observable measured by the bare hardware, W^dag sigma_z W.
  ComplexMatrix hardware_observable() const;
  /// Probabilities of the corrected outcomes {+1, -1} on a one-qubit state.
  std::pair<double, double> outcome_probabilities(const ComplexMatrix &rho) const;
};

/// z: bare splitter. x: half-wave plate at pi/8. y: quarter-wave plate at
/// pi/4. Throws std::invalid_argument for the identity.
PauliDetector detector_for(PauliIndex axis);

}  // namespace qpt

#endif  // QPT_OPTICS_HPP
