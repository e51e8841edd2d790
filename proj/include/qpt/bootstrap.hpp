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

#ifndef QPT_BOOTSTRAP_HPP
#define QPT_BOOTSTRAP_HPP

#include <cstdint>
#include <functional>
#include <span>

#include "qpt/experiment.hpp"
#include "qpt/linalg.hpp"

namespace qpt {

/// Maps a correlation table to a gauge-fixed matrix estimate.
using TableEstimator = std::function<ComplexMatrix(const CorrelationTable &)>;

struct BootstrapOptions {
  int resamples = 1000;
  std::uint64_t seed = 0;
};

inline constexpr int kMinResamples = 100;

struct BootstrapResult {
  RealMatrix std_re;
  RealMatrix std_im;
  /// Resamples rejected because the estimator failed on them.
  int redraws = 0;
  /// redraws exceeded 1% of the requested resamples.
  bool redraw_warning = false;
};

/// Nonparametric bootstrap: events are resampled with replacement within
/// each setting, the estimator is re-run, and the element-wise sample
/// standard deviations of real and imaginary parts are reported. Resample b
/// draws from RandomStream(seed, b). Each replicate's overall sign is aligned
/// with the point estimate, since the unitary gauge leaves a +-1 freedom.
///
/// Throws std::invalid_argument for fewer than kMinResamples resamples.
BootstrapResult bootstrap_errors(std::span<const EventRecord> events,
                                 const TableEstimator &estimator,
                                 const BootstrapOptions &options = {});
BootstrapResult bootstrap_errors(const OutcomeCounts &counts, const TableEstimator &estimator,
                                 const BootstrapOptions &options = {});

}  // namespace qpt

#endif  // QPT_BOOTSTRAP_HPP
