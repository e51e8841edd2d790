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

#include "qpt/bootstrap.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/rng.hpp"

namespace qpt {

namespace {

// Drawing n events with replacement from one setting only changes how many
// land in each outcome class, so it is done on the counts directly.
OutcomeCounts resample(const OutcomeCounts &counts, RandomStream &rng) {
  OutcomeCounts out{};
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const auto &c = counts[k];
    const std::uint64_t n = c[0] + c[1] + c[2] + c[3];
    const std::uint64_t c01 = c[0] + c[1];
    const std::uint64_t c012 = c01 + c[2];
    for (std::uint64_t e = 0; e < n; ++e) {
      const std::uint64_t pick = rng.below(n);
      const int o = pick < c[0] ? 0 : pick < c01 ? 1 : pick < c012 ? 2 : 3;
      ++out[k][o];
    }
  }
  return out;
}

}  // namespace

BootstrapResult bootstrap_errors(std::span<const EventRecord> events,
                                 const TableEstimator &estimator,
                                 const BootstrapOptions &options) {
  return bootstrap_errors(tally(events), estimator, options);
}

BootstrapResult bootstrap_errors(const OutcomeCounts &counts, const TableEstimator &estimator,
                                 const BootstrapOptions &options) {
  if (options.resamples < kMinResamples) {
    throw std::invalid_argument("bootstrap_errors: at least " + std::to_string(kMinResamples) +
                                " resamples required");
  }
  const ComplexMatrix point = estimator(correlations_from_counts(counts));
  const auto rows = point.rows();
  const auto cols = point.cols();

  RealMatrix sum_re = RealMatrix::Zero(rows, cols), sum_im = RealMatrix::Zero(rows, cols);
  RealMatrix sq_re = RealMatrix::Zero(rows, cols), sq_im = RealMatrix::Zero(rows, cols);
  BootstrapResult result;
  const int max_attempts = 2 * options.resamples;
  int accepted = 0;
  std::uint64_t stream = 0;
  while (accepted < options.resamples) {
    if (static_cast<int>(stream) >= max_attempts) {
      throw std::runtime_error("bootstrap_errors: estimator failed on " +
                               std::to_string(result.redraws) + " of " +
                               std::to_string(stream) + " resamples");
    }
    RandomStream rng(options.seed, stream++);
    ComplexMatrix rep;
    try {
      rep = estimator(correlations_from_counts(resample(counts, rng)));
    } catch (const DegenerateReferenceError &) {
      ++result.redraws;
      continue;
    } catch (const IncompleteQuorumError &) {
      ++result.redraws;
      continue;
    } catch (const NullEventError &) {
      ++result.redraws;
      continue;
    }
    if ((point.adjoint() * rep).trace().real() < 0.0) {
      rep = -rep;
    }
    sum_re += rep.real();
    sum_im += rep.imag();
    sq_re += rep.real().cwiseAbs2();
    sq_im += rep.imag().cwiseAbs2();
    ++accepted;
  }
  const double b = static_cast<double>(accepted);
  auto sample_std = [b](const RealMatrix &sum, const RealMatrix &sq) {
    RealMatrix var = (sq - sum.cwiseAbs2() / b) / (b - 1.0);
    return RealMatrix(var.cwiseMax(0.0).cwiseSqrt());
  };
  result.std_re = sample_std(sum_re, sq_re);
  result.std_im = sample_std(sum_im, sq_im);
  result.redraw_warning = result.redraws * 100 > options.resamples;
  return result;
}

}  // namespace qpt
