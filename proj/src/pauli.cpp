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

#include "qpt/pauli.hpp"

#include <stdexcept>

namespace qpt {

PauliIndex::PauliIndex(int value) : value_(value) {
  if (value < 0 || value > 3) {
    throw std::invalid_argument("PauliIndex out of range: " + std::to_string(value));
  }
}

char PauliIndex::letter() const {
  static constexpr char kLetters[] = {'I', 'x', 'y', 'z'};
  return kLetters[value_];
}

PauliIndex PauliIndex::from_letter(char c) {
  switch (c) {
    case 'I':
    case 'i':
    case '0':
      return PauliIndex(0);
    case 'x':
    case 'X':
      return PauliIndex(1);
    case 'y':
    case 'Y':
      return PauliIndex(2);
    case 'z':
    case 'Z':
      return PauliIndex(3);
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

ComplexMatrix pauli(PauliIndex i) {
  const Complex I(0.0, 1.0);
  ComplexMatrix m(2, 2);
  switch (i.value()) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -I, I, 0;
      break;
    default:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

ComplexMatrix pauli_string(std::span<const int> indices) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i : indices) {
    out = tensor(out, pauli(PauliIndex(i)));
  }
  return out;
}

}  // namespace qpt
