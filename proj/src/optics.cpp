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

#include "qpt/optics.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qpt {

namespace {

constexpr double kPi = std::numbers::pi;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(s) + "'");
  }
  return value;
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

WavePlate::WavePlate(double phi, double theta) : phi_(phi), theta_(theta) {
  if (!std::isfinite(phi) || !std::isfinite(theta)) {
    throw std::invalid_argument("WavePlate: angles must be finite");
  }
  phi_ = std::fmod(phi_, 2.0 * kPi);
  if (phi_ < 0.0) {
    phi_ += 2.0 * kPi;
  }
}

WavePlate WavePlate::from_units_of_pi(double phi_over_pi, double theta_over_pi) {
  return WavePlate(phi_over_pi * kPi, theta_over_pi * kPi);
}

ComplexMatrix waveplate_jones(const WavePlate &plate) {
  const Complex e = std::polar(1.0, plate.phi());
  const Complex zp = 0.5 * (1.0 + e);
  const Complex zm = 0.5 * (1.0 - e);
  const double s = std::sin(2.0 * plate.theta());
  const double c = std::cos(2.0 * plate.theta());
  ComplexMatrix w(2, 2);
  w << zp + c * zm, s * zm,
       s * zm,      zp - c * zm;
  return w;
}

RealMatrix bloch_rotation(const ComplexMatrix &w) {
  RealMatrix r(3, 3);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      r(a, b) = 0.5 * (pauli(a + 1) * w * pauli(b + 1) * w.adjoint()).trace().real();
    }
  }
  return r;
}

RealMatrix waveplate_bloch(const WavePlate &plate) {
  return bloch_rotation(waveplate_jones(plate));
}

QuantumChannel compile_device(const DeviceSpec &device) {
  if (device.plates.empty()) {
    throw std::invalid_argument("compile_device: device has no wave plates");
  }
  ComplexMatrix u = ComplexMatrix::Identity(2, 2);
  for (const auto &plate : device.plates) {
    u = waveplate_jones(plate) * u;
  }
  return QuantumChannel::unitary(u);
}

std::string format_plates(const DeviceSpec &device) {
  std::string out;
  for (std::size_t k = 0; k < device.plates.size(); ++k) {
    if (k > 0) {
      out += ", ";
    }
    out += format_number(device.plates[k].phi() / kPi) + ":" +
           format_number(device.plates[k].theta() / kPi);
  }
  return out;
}

DeviceSpec parse_plates(std::string_view text) {
  DeviceSpec device;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("plate '" + std::string(item) +
                                  "' must read phi_over_pi:theta_over_pi");
    }
    device.plates.push_back(WavePlate::from_units_of_pi(parse_double(item.substr(0, colon)),
                                                        parse_double(item.substr(colon + 1))));
  }
  if (device.plates.empty()) {
    throw std::invalid_argument("plate list is empty");
  }
  return device;
}

ComplexMatrix PauliDetector::hardware_observable() const {
  if (!pre_plate) {
    return pauli(PauliIndex::kZ);
  }
  const ComplexMatrix w = waveplate_jones(*pre_plate);
  return w.adjoint() * pauli(PauliIndex::kZ) * w;
}

std::pair<double, double> PauliDetector::outcome_probabilities(const ComplexMatrix &rho) const {
  ComplexMatrix after = rho;
  if (pre_plate) {
    const ComplexMatrix w = waveplate_jones(*pre_plate);
    after = w * rho * w.adjoint();
  }
  const double ph = after(0, 0).real();
  const double pv = after(1, 1).real();
  return sign > 0 ? std::pair{ph, pv} : std::pair{pv, ph};
}

PauliDetector detector_for(PauliIndex axis) {
  PauliDetector det{axis, std::nullopt, 1};
  switch (axis.value()) {
    case PauliIndex::kX:
      det.pre_plate = WavePlate(kPi, kPi / 8.0);
      break;
    case PauliIndex::kY:
      det.pre_plate = WavePlate(kPi / 2.0, kPi / 4.0);
      break;
    case PauliIndex::kZ:
      break;
    default:
      throw std::invalid_argument("detector_for: the identity is not measured");
  }
  // Resolve the sign from the Heisenberg-picture observable.
  const double overlap =
      0.5 * (pauli(axis) * det.hardware_observable()).trace().real();
  if (std::abs(std::abs(overlap) - 1.0) > 1e-12) {
    throw std::logic_error("detector_for: pre-plate does not map sigma_z onto the axis");
  }
  det.sign = overlap > 0 ? 1 : -1;
  return det;
}

}  // namespace qpt
