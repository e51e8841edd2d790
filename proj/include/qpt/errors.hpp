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

#ifndef QPT_ERRORS_HPP
#define QPT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qpt {

/// Conditioning on an outcome whose probability is numerically zero.
class NullEventError : public std::runtime_error {
 public:
  NullEventError(const std::string &what, double probability)
      : std::runtime_error(what), probability_(probability) {}
  double probability() const { return probability_; }

 private:
  double probability_;
};

/// A Choi matrix with an eigenvalue below -psd_slack.
class NotCompletelyPositiveError : public std::runtime_error {
 public:
  NotCompletelyPositiveError(const std::string &what, double negativity)
      : std::runtime_error(what), negativity_(negativity) {}
  /// Magnitude of the most negative eigenvalue.
  double negativity() const { return negativity_; }

 private:
  double negativity_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Correlation data does not cover every (axis1, axis2) pair.
class IncompleteQuorumError : public std::runtime_error {
 public:
  IncompleteQuorumError(const std::string &what, std::vector<std::string> missing)
      : std::runtime_error(what), missing_(std::move(missing)) {}
  const std::vector<std::string> &missing() const { return missing_; }

 private:
  std::vector<std::string> missing_;
};

/// The normalizing element |Psi_ab|^2 is below the floor.
class DegenerateReferenceError : public std::runtime_error {
 public:
  DegenerateReferenceError(const std::string &what, double p)
      : std::runtime_error(what), p_(p) {}
  double p() const { return p_; }

 private:
  double p_;
};

/// Input state whose coefficient matrix is not invertible.
class UnfaithfulInputError : public std::runtime_error {
 public:
  UnfaithfulInputError(const std::string &what, double condition_number)
      : std::runtime_error(what), condition_number_(condition_number) {}
  double condition_number() const { return condition_number_; }

 private:
  double condition_number_;
};

/// Malformed input file; line() is 1-based, 0 when not line-specific.
class DataFormatError : public std::runtime_error {
 public:
  DataFormatError(const std::string &what, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qpt

#endif  // QPT_ERRORS_HPP
