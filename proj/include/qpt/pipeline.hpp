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

#ifndef QPT_PIPELINE_HPP
#define QPT_PIPELINE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpt/config.hpp"
#include "qpt/event_log.hpp"
#include "qpt/result_document.hpp"

namespace qpt {

/// A file could not be read or written.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SimulationSummary {
  std::uint64_t coincidences = 0;
  std::uint64_t trials = 0;
  /// Setting label and event count, in enumeration order.
  std::vector<std::pair<std::string, std::uint64_t>> per_setting;
};

/// Events for the configured experiment, as an in-memory log.
EventLog simulate_events(const PipelineConfig &config, SimulationSummary *summary = nullptr);

/// Reconstruction from exact correlations of the configured device.
ResultDocument reconstruct_exact(const PipelineConfig &config);
/// Reconstruction from recorded events, with bootstrap errors for
/// single-pair data.
ResultDocument reconstruct_from_log(const PipelineConfig &config, const EventLog &log);

/// Ground truth for a result, in the same gauge as the estimate; empty when
/// the config carries no device or the truth is not of the estimated kind.
std::optional<ComplexMatrix> ground_truth(const PipelineConfig &config,
                                          const ReconstructionResult &result);

SimulationSummary cmd_simulate(const PipelineConfig &config,
                               const std::filesystem::path &events_path, std::ostream &report);
ResultDocument cmd_reconstruct(const PipelineConfig &config,
                               const std::filesystem::path &events_path,
                               const std::filesystem::path &result_path, std::ostream &report);
void cmd_plotdata(const std::filesystem::path &result_path, const std::filesystem::path &plot_path,
                  std::ostream &report);

struct PipelineArtifacts {
  std::optional<std::filesystem::path> events;
  std::filesystem::path result;
  std::filesystem::path plot;
  ResultDocument document;
};

/// simulate, reconstruct and plotdata in one go; outputs land under out_dir.
PipelineArtifacts cmd_pipeline(const PipelineConfig &config, const std::filesystem::path &out_dir,
                               std::ostream &report);

/// Config output path resolved against an output directory.
std::filesystem::path resolve_output(const std::filesystem::path &out_dir,
                                     const std::filesystem::path &path);

}  // namespace qpt

#endif  // QPT_PIPELINE_HPP
