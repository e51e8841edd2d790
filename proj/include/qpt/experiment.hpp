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

#ifndef QPT_EXPERIMENT_HPP
#define QPT_EXPERIMENT_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qpt/pauli.hpp"
#include "qpt/state.hpp"

namespace qpt {

/// Detector axes on beam 1 and beam 2, each in {x, y, z}.
class MeasurementSetting {
 public:
  static constexpr int kCount = 9;

  MeasurementSetting(PauliIndex axis1, PauliIndex axis2);
  MeasurementSetting(int axis1, int axis2) : MeasurementSetting(PauliIndex(axis1), PauliIndex(axis2)) {}
  /// Inverse of index().
  static MeasurementSetting from_index(int index);

  PauliIndex axis1() const { return axis1_; }
  PauliIndex axis2() const { return axis2_; }
  /// Enumeration order xx, xy, xz, yx, ..., zz.
  int index() const { return 3 * (axis1_.value() - 1) + (axis2_.value() - 1); }
  /// Two letters, e.g. "xz".
  std::string label() const;

  friend bool operator==(const MeasurementSetting &, const MeasurementSetting &) = default;

 private:
  PauliIndex axis1_;
  PauliIndex axis2_;
};

/// One recorded coincidence. Signs are the detector outcomes after sign
/// correction, so each estimates +sigma_axis.
struct EventRecord {
  MeasurementSetting setting;
  int s1;
  int s2;

  friend bool operator==(const EventRecord &, const EventRecord &) = default;
};

/// Symmetric single-photon detection efficiency of all four detectors.
struct LossModel {
  double eta;
  /// Throws std::invalid_argument unless 0 < eta <= 1.
  explicit LossModel(double eta);
};

struct ExperimentPlan {
  /// Coincidences per setting, indexed by MeasurementSetting::index().
  std::array<std::uint64_t, MeasurementSetting::kCount> allocation{};
  std::uint64_t seed = 0;
  std::optional<LossModel> loss;

  /// total / 9 per setting, remainder to the earliest settings.
  static ExperimentPlan uniform(std::uint64_t total, std::uint64_t seed,
                                std::optional<LossModel> loss = std::nullopt);
  std::uint64_t total() const;
};

/// Joint outcome probabilities indexed by outcome_index(s1, s2):
/// (+,+), (+,-), (-,+), (-,-).
using JointProbabilities = std::array<double, 4>;

constexpr int outcome_index(int s1, int s2) { return (s1 > 0 ? 0 : 2) + (s2 > 0 ? 0 : 1); }
constexpr int outcome_s1(int index) { return index < 2 ? 1 : -1; }
constexpr int outcome_s2(int index) { return index % 2 == 0 ? 1 : -1; }

/// Probability floor below which a negative value is an error rather than
/// rounding noise.
inline constexpr double kProbabilityClip = 1e-12;

/// P(s1, s2) = (1 + s1 m1 + s2 m2 + s1 s2 c12) / 4.
JointProbabilities joint_probs(const BipartiteState &state, const MeasurementSetting &setting);

/// Tetra-indexed table of averages of s_i^(1) s_j^(2), with s_0 = 1.
struct CorrelationTable {
  Eigen::Matrix4d entries = Eigen::Matrix4d::Zero();
  /// Number of events behind each entry; all zero for exact tables.
  Eigen::Matrix<std::int64_t, 4, 4> counts = Eigen::Matrix<std::int64_t, 4, 4>::Zero();

  double operator()(int i, int j) const { return entries(i, j); }
  bool is_exact() const { return counts.isZero(); }
};

/// Infinite-statistics table: (i, j) = <sigma_i (x) sigma_j>.
CorrelationTable exact_correlations(const BipartiteState &state);

struct ExperimentRun {
  std::vector<EventRecord> events;
  /// Emitted pairs, including those lost to detector inefficiency.
  std::uint64_t trials = 0;
};

/// Draws the planned coincidences setting by setting, in enumeration order.
/// Setting k uses RandomStream(plan.seed, k). With a loss model each trial
/// keeps each photon with probability eta and only double detections are
/// recorded.
ExperimentRun run_experiment(const BipartiteState &state, const ExperimentPlan &plan);

/// Per-setting counts of the four outcomes.
using OutcomeCounts = std::array<std::array<std::uint64_t, 4>, MeasurementSetting::kCount>;

OutcomeCounts tally(std::span<const EventRecord> events);

/// Joint entries from their own setting; marginals pooled over the partner
/// axis. Throws IncompleteQuorumError naming every setting with no events.
CorrelationTable correlations_from_counts(const OutcomeCounts &counts);
CorrelationTable correlations_from_events(std::span<const EventRecord> events);

}  // namespace qpt

#endif  // QPT_EXPERIMENT_HPP
