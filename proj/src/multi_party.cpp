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

#include "qpt/multi_party.hpp"

#include <stdexcept>
#include <string>

#include "qpt/errors.hpp"
#include "qpt/pauli.hpp"
#include "qpt/rng.hpp"

namespace qpt {

namespace {

int parties_from_dim(Eigen::Index dim) {
  int q = 0;
  while ((Eigen::Index{1} << q) < dim) {
    ++q;
  }
  if ((Eigen::Index{1} << q) != dim || q == 0) {
    throw std::invalid_argument("density dimension must be 2^q with q >= 1");
  }
  return q;
}

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) {
    r *= base;
  }
  return r;
}

}  // namespace

PauliTensor::PauliTensor(int parties)
    : parties_(parties), entries_(ipow(4, parties), 0.0), counts_(ipow(4, parties), 0) {
  if (parties < 1 || parties > 6) {
    throw std::invalid_argument("PauliTensor: parties must lie in 1..6");
  }
}

std::size_t PauliTensor::flatten(std::span<const int> indices) const {
  if (static_cast<int>(indices.size()) != parties_) {
    throw std::invalid_argument("PauliTensor: index arity mismatch");
  }
  std::size_t flat = 0;
  for (int i : indices) {
    if (i < 0 || i > 3) {
      throw std::invalid_argument("PauliTensor: index out of range");
    }
    flat = 4 * flat + static_cast<std::size_t>(i);
  }
  return flat;
}

std::vector<int> PauliTensor::unflatten(std::size_t flat) const {
  std::vector<int> idx(parties_);
  for (int k = parties_ - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % 4);
    flat /= 4;
  }
  return idx;
}

PauliTensor exact_pauli_tensor(const ComplexMatrix &density) {
  const int q = parties_from_dim(density.rows());
  PauliTensor tensor(q);
  for (std::size_t f = 0; f < tensor.size(); ++f) {
    const std::vector<int> idx = tensor.unflatten(f);
    tensor[f] = (density * pauli_string(idx)).trace().real();
  }
  return tensor;
}

ComplexMatrix density_from_pauli_tensor(const PauliTensor &tensor) {
  const Eigen::Index dim = Eigen::Index{1} << tensor.parties();
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  for (std::size_t f = 0; f < tensor.size(); ++f) {
    if (tensor[f] != 0.0) {
      rho += tensor[f] * pauli_string(tensor.unflatten(f));
    }
  }
  return rho / static_cast<double>(dim);
}

std::size_t multi_party_setting_count(int parties) { return ipow(3, parties); }

std::vector<int> multi_party_setting(int parties, std::size_t index) {
  if (index >= multi_party_setting_count(parties)) {
    throw std::invalid_argument("multi_party_setting: index out of range");
  }
  std::vector<int> axes(parties);
  for (int k = parties - 1; k >= 0; --k) {
    axes[k] = static_cast<int>(index % 3) + 1;
    index /= 3;
  }
  return axes;
}

std::vector<double> multi_party_probs(const ComplexMatrix &density, std::span<const int> axes) {
  const int q = parties_from_dim(density.rows());
  if (static_cast<int>(axes.size()) != q) {
    throw std::invalid_argument("multi_party_probs: axis count mismatch");
  }
  const ComplexMatrix id = pauli(0);
  std::vector<double> probs(std::size_t{1} << q);
  for (std::size_t pattern = 0; pattern < probs.size(); ++pattern) {
    ComplexMatrix projector = ComplexMatrix::Identity(1, 1);
    for (int k = 0; k < q; ++k) {
      const int s = (pattern >> (q - 1 - k)) & 1U ? -1 : 1;
      projector = tensor(projector, 0.5 * (id + s * pauli(axes[k])));
    }
    const double p = (density * projector).trace().real();
    probs[pattern] = p < 0.0 ? 0.0 : p;
  }
  return probs;
}

std::vector<MultiPartyEvent> run_multi_party_experiment(const ComplexMatrix &density,
                                                        std::uint64_t total,
                                                        std::uint64_t seed) {
  const int q = parties_from_dim(density.rows());
  const std::size_t settings = multi_party_setting_count(q);
  if (total == 0) {
    throw std::invalid_argument("run_multi_party_experiment: no coincidences requested");
  }
  std::vector<MultiPartyEvent> events;
  events.reserve(total);
  for (std::size_t k = 0; k < settings; ++k) {
    const std::uint64_t n = total / settings + (k < total % settings ? 1 : 0);
    if (n == 0) {
      continue;
    }
    const std::vector<int> axes = multi_party_setting(q, k);
    const std::vector<double> probs = multi_party_probs(density, axes);
    RandomStream rng(seed, k);
    for (std::uint64_t e = 0; e < n; ++e) {
      const double u = rng.uniform();
      double acc = 0.0;
      std::size_t pattern = probs.size() - 1;
      for (std::size_t o = 0; o < probs.size(); ++o) {
        acc += probs[o];
        if (u < acc) {
          pattern = o;
          break;
        }
      }
      while (probs[pattern] == 0.0 && pattern > 0) {
        --pattern;
      }
      MultiPartyEvent ev{axes, std::vector<int>(q)};
      for (int j = 0; j < q; ++j) {
        ev.signs[j] = (pattern >> (q - 1 - j)) & 1U ? -1 : 1;
      }
      events.push_back(std::move(ev));
    }
  }
  return events;
}

PauliTensor pauli_tensor_from_events(int parties, std::span<const MultiPartyEvent> events) {
  PauliTensor tensor(parties);
  std::vector<double> sums(tensor.size(), 0.0);
  std::vector<std::int64_t> counts(tensor.size(), 0);
  std::vector<std::int64_t> per_setting(multi_party_setting_count(parties), 0);
  std::vector<int> idx(parties);
  for (const auto &ev : events) {
    if (static_cast<int>(ev.axes.size()) != parties ||
        static_cast<int>(ev.signs.size()) != parties) {
      throw std::invalid_argument("pauli_tensor_from_events: event arity mismatch");
    }
    std::size_t setting = 0;
    for (int k = 0; k < parties; ++k) {
      if (ev.axes[k] < 1 || ev.axes[k] > 3 || (ev.signs[k] != 1 && ev.signs[k] != -1)) {
        throw std::invalid_argument("pauli_tensor_from_events: malformed event");
      }
      setting = 3 * setting + static_cast<std::size_t>(ev.axes[k] - 1);
    }
    ++per_setting[setting];
    for (unsigned mask = 0; mask < (1U << parties); ++mask) {
      int product = 1;
      for (int k = 0; k < parties; ++k) {
        const bool included = (mask >> (parties - 1 - k)) & 1U;
        idx[k] = included ? ev.axes[k] : 0;
        if (included) {
          product *= ev.signs[k];
        }
      }
      const std::size_t f = tensor.flatten(idx);
      sums[f] += product;
      ++counts[f];
    }
  }
  std::vector<std::string> missing;
  for (std::size_t s = 0; s < per_setting.size(); ++s) {
    if (per_setting[s] == 0) {
      std::string label;
      for (int a : multi_party_setting(parties, s)) {
        label += "Ixyz"[a];
      }
      missing.push_back(label);
    }
  }
  if (!missing.empty()) {
    throw IncompleteQuorumError("incomplete quorum: " + std::to_string(missing.size()) +
                                    " joint settings have no events",
                                std::move(missing));
  }
  for (std::size_t f = 0; f < tensor.size(); ++f) {
    tensor[f] = f == 0 ? 1.0 : sums[f] / static_cast<double>(counts[f]);
    tensor.set_count(f, counts[f]);
  }
  return tensor;
}

}  // namespace qpt
