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

#include "qpt/experiment.hpp"

#include <numeric>
#include <stdexcept>

#include "qpt/errors.hpp"
#include "qpt/rng.hpp"

namespace qpt {

MeasurementSetting::MeasurementSetting(PauliIndex axis1, PauliIndex axis2)
    : axis1_(axis1), axis2_(axis2) {
  if (axis1.is_identity() || axis2.is_identity()) {
    throw std::invalid_argument("MeasurementSetting: axes must be x, y or z");
  }
}

MeasurementSetting MeasurementSetting::from_index(int index) {
  if (index < 0 || index >= kCount) {
    throw std::invalid_argument("MeasurementSetting: index out of range");
  }
  return MeasurementSetting(index / 3 + 1, index % 3 + 1);
}

std::string MeasurementSetting::label() const {
  return {axis1_.letter(), axis2_.letter()};
}

LossModel::LossModel(double eta) : eta(eta) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("LossModel: eta must lie in (0, 1]");
  }
}

ExperimentPlan ExperimentPlan::uniform(std::uint64_t total, std::uint64_t seed,
                                       std::optional<LossModel> loss) {
  ExperimentPlan plan;
  plan.seed = seed;
  plan.loss = loss;
  const std::uint64_t base = total / MeasurementSetting::kCount;
  const std::uint64_t extra = total % MeasurementSetting::kCount;
  for (std::uint64_t k = 0; k < MeasurementSetting::kCount; ++k) {
    plan.allocation[k] = base + (k < extra ? 1 : 0);
  }
  return plan;
}

std::uint64_t ExperimentPlan::total() const {
  return std::accumulate(allocation.begin(), allocation.end(), std::uint64_t{0});
}

JointProbabilities joint_probs(const BipartiteState &state, const MeasurementSetting &setting) {
  const ComplexMatrix a = pauli(setting.axis1());
  const ComplexMatrix b = pauli(setting.axis2());
  const ComplexMatrix id = pauli(0);
  const double m1 = state.expectation(a, id);
  const double m2 = state.expectation(id, b);
  const double c12 = state.expectation(a, b);
  JointProbabilities p{};
  for (int k = 0; k < 4; ++k) {
    const int s1 = outcome_s1(k);
    const int s2 = outcome_s2(k);
    double v = 0.25 * (1.0 + s1 * m1 + s2 * m2 + s1 * s2 * c12);
    if (v < -kProbabilityClip) {
      throw std::invalid_argument("joint_probs: negative probability " + std::to_string(v));
    }
    p[k] = v < 0.0 ? 0.0 : v;
  }
  return p;
}

CorrelationTable exact_correlations(const BipartiteState &state) {
  CorrelationTable table;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      table.entries(i, j) = state.expectation(pauli(i), pauli(j));
    }
  }
  table.entries(0, 0) = 1.0;
  return table;
}

namespace {

int sample_outcome(const JointProbabilities &p, double u) {
  double acc = 0.0;
  for (int k = 0; k < 3; ++k) {
    acc += p[k];
    if (u < acc) {
      return k;
    }
  }
  // Skip trailing zero-probability outcomes when rounding leaves u >= acc.
  for (int k = 3; k >= 0; --k) {
    if (p[k] > 0.0) {
      return k;
    }
  }
  return 3;
}

}  // namespace

ExperimentRun run_experiment(const BipartiteState &state, const ExperimentPlan &plan) {
  if (plan.total() == 0) {
    throw std::invalid_argument("run_experiment: plan allocates no coincidences");
  }
  ExperimentRun run;
  run.events.reserve(plan.total());
  for (int k = 0; k < MeasurementSetting::kCount; ++k) {
    const std::uint64_t n = plan.allocation[k];
    if (n == 0) {
      continue;
    }
    const MeasurementSetting setting = MeasurementSetting::from_index(k);
    const JointProbabilities p = joint_probs(state, setting);
    RandomStream rng(plan.seed, static_cast<std::uint64_t>(k));
    std::uint64_t recorded = 0;
    while (recorded < n) {
      ++run.trials;
      const int outcome = sample_outcome(p, rng.uniform());
      if (plan.loss) {
        const bool hit1 = rng.uniform() < plan.loss->eta;
        const bool hit2 = rng.uniform() < plan.loss->eta;
        if (!(hit1 && hit2)) {
          continue;
        }
      }
      run.events.push_back({setting, outcome_s1(outcome), outcome_s2(outcome)});
      ++recorded;
    }
  }
  return run;
}

OutcomeCounts tally(std::span<const EventRecord> events) {
  OutcomeCounts counts{};
  for (const auto &e : events) {
    if ((e.s1 != 1 && e.s1 != -1) || (e.s2 != 1 && e.s2 != -1)) {
      throw std::invalid_argument("tally: outcome signs must be +1 or -1");
    }
    ++counts[e.setting.index()][outcome_index(e.s1, e.s2)];
  }
  return counts;
}

CorrelationTable correlations_from_counts(const OutcomeCounts &counts) {
  std::vector<std::string> missing;
  for (int k = 0; k < MeasurementSetting::kCount; ++k) {
    const auto &c = counts[k];
    if (c[0] + c[1] + c[2] + c[3] == 0) {
      missing.push_back(MeasurementSetting::from_index(k).label());
    }
  }
  if (!missing.empty()) {
    std::string what = "incomplete quorum, no events for settings:";
    for (const auto &m : missing) {
      what += " " + m;
    }
    throw IncompleteQuorumError(what, std::move(missing));
  }

  Eigen::Matrix4d sums = Eigen::Matrix4d::Zero();
  CorrelationTable table;
  for (int k = 0; k < MeasurementSetting::kCount; ++k) {
    const MeasurementSetting setting = MeasurementSetting::from_index(k);
    const int i = setting.axis1().value();
    const int j = setting.axis2().value();
    for (int o = 0; o < 4; ++o) {
      const auto n = static_cast<std::int64_t>(counts[k][o]);
      const int s1 = outcome_s1(o);
      const int s2 = outcome_s2(o);
      sums(i, j) += static_cast<double>(n * s1 * s2);
      sums(i, 0) += static_cast<double>(n * s1);
      sums(0, j) += static_cast<double>(n * s2);
      table.counts(i, j) += n;
      table.counts(i, 0) += n;
      table.counts(0, j) += n;
      table.counts(0, 0) += n;
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == 0 && j == 0) {
        continue;
      }
      table.entries(i, j) = sums(i, j) / static_cast<double>(table.counts(i, j));
    }
  }
  table.entries(0, 0) = 1.0;
  return table;
}

CorrelationTable correlations_from_events(std::span<const EventRecord> events) {
  return correlations_from_counts(tally(events));
}

}  // namespace qpt
