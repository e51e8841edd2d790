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

#ifndef QPT_CONFIG_HPP
#define QPT_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qpt/bootstrap.hpp"
#include "qpt/channel.hpp"
#include "qpt/experiment.hpp"
#include "qpt/optics.hpp"
#include "qpt/state.hpp"
#include "qpt/tomography.hpp"

namespace qpt {

/// Invalid configuration. `field` is "section.key" when the problem is tied
/// to one entry; `line` is set for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string &what, std::string field, std::size_t line = 0);
  const std::string &field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

enum class EstimatorKind { kUnitary, kChoi, kStateOnly };

std::string to_string(EstimatorKind kind);

struct DeviceConfig {
  /// As written in the config, e.g. "plates 0.45:-0.138" or "depolarizing 0.3".
  std::string description;
  /// Set for wave-plate devices.
  std::optional<DeviceSpec> plates;
  /// Set for two-qubit gates; the device then acts on two pairs.
  std::optional<std::string> gate;
  QuantumChannel channel = QuantumChannel::identity();
};

struct OutputPaths {
  std::filesystem::path events = "events.log";
  std::filesystem::path result = "result.txt";
  std::filesystem::path plot = "plot.csv";
};

struct PipelineConfig {
  std::string name;
  std::string source_description;
  BipartiteState input = triplet_state();
  /// Absent when the config only describes how to analyze existing data.
  std::optional<DeviceConfig> device;

  std::uint64_t coincidences = 0;
  ExperimentPlan plan;
  /// Reconstruct from exact correlations; no events are drawn.
  bool exact = false;

  EstimatorKind estimator = EstimatorKind::kUnitary;
  ReconstructionOptions reconstruction;
  BootstrapOptions bootstrap;
  bool bootstrap_seed_explicit = false;

  OutputPaths outputs;
  std::vector<std::string> warnings;

  /// Number of entangled pairs sent through the device (1, or 2 for gates).
  int pairs() const { return device && device->gate ? 2 : 1; }
  double eta() const { return plan.loss ? plan.loss->eta : 1.0; }
  /// Re-seed the experiment; the bootstrap follows unless its seed was set.
  void override_seed(std::uint64_t seed);
};

PipelineConfig parse_config(std::istream &in, std::string name = "config");
PipelineConfig load_config(const std::filesystem::path &path);
/// Bundled presets: fig3, fig4, cnot, depol.
PipelineConfig load_preset(std::string_view name);
std::filesystem::path preset_directory();

/// Complex scalar in the forms 0.5, -2, 0.3i, -i, 0.3+0.2i, 1e-3-4i.
Complex parse_complex(std::string_view text);
/// Whitespace-separated row-major entries of a 2x2 (or 4x4) matrix.
ComplexMatrix parse_complex_matrix(std::string_view text);

}  // namespace qpt

#endif  // QPT_CONFIG_HPP
