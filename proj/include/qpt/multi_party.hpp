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

#ifndef QPT_MULTI_PARTY_HPP
#define QPT_MULTI_PARTY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qpt/linalg.hpp"

namespace qpt {

// Pauli correlation data over q detected qubits, used when the device acts
// on several qubits and one entangled pair is supplied per device qubit.

/// Averages of prod_k s_{i_k}^{(k)} for every tetra-index tuple (i_1..i_q),
/// s_0 = 1. Tuples are flattened big-endian in base 4.
class PauliTensor {
 public:
  explicit PauliTensor(int parties);

  int parties() const { return parties_; }
  std::size_t size() const { return entries_.size(); }

  double &operator[](std::size_t flat) { return entries_[flat]; }
  double operator[](std::size_t flat) const { return entries_[flat]; }
  double at(std::span<const int> indices) const { return entries_[flatten(indices)]; }

  std::int64_t count(std::size_t flat) const { return counts_[flat]; }
  void set_count(std::size_t flat, std::int64_t n) { counts_[flat] = n; }

  std::size_t flatten(std::span<const int> indices) const;
  std::vector<int> unflatten(std::size_t flat) const;

 private:
  int parties_;
  std::vector<double> entries_;
  std::vector<std::int64_t> counts_;
};

/// Tr[rho sigma_{i_1} (x) ... (x) sigma_{i_q}] for a 2^q-dimensional rho.
PauliTensor exact_pauli_tensor(const ComplexMatrix &density);

/// sum over tuples of entry * sigma_{i_1} (x) ... / 2^q.
ComplexMatrix density_from_pauli_tensor(const PauliTensor &tensor);

/// One coincidence across q detectors; axes in {1,2,3}, signs +-1.
struct MultiPartyEvent {
  std::vector<int> axes;
  std::vector<int> signs;

  friend bool operator==(const MultiPartyEvent &, const MultiPartyEvent &) = default;
};

/// Number of joint settings, 3^q.
std::size_t multi_party_setting_count(int parties);
/// Axes of joint setting `index`, base-3 big-endian, 1-based axes.
std::vector<int> multi_party_setting(int parties, std::size_t index);

/// Outcome probabilities of one joint setting, indexed by the bit pattern
/// where bit (q-1-k) set means s_k = -1.
std::vector<double> multi_party_probs(const ComplexMatrix &density, std::span<const int> axes);

/// `total` coincidences split evenly over the 3^q settings (remainder to the
/// earliest); setting k draws from RandomStream(seed, k).
std::vector<MultiPartyEvent> run_multi_party_experiment(const ComplexMatrix &density,
                                                        std::uint64_t total,
                                                        std::uint64_t seed);

/// Joint entries from their own setting; entries with identity positions
/// pooled over every setting that agrees on the non-identity positions.
/// Throws IncompleteQuorumError when a joint setting has no events.
PauliTensor pauli_tensor_from_events(int parties, std::span<const MultiPartyEvent> events);

}  // namespace qpt

#endif  // QPT_MULTI_PARTY_HPP
