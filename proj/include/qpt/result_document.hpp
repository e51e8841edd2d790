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

// Text form of a reconstruction:
//
//   kind: device_unitary
//   p: 0.49871
//   ...
//                                   <- blank line
//   label,re,im,err_re,err_im,theory_re,theory_im
//   U00,0.85,0.17,0.011,0.012,0.851,0.174
//
// Theory cells are empty when no ground truth is known.

#ifndef QPT_RESULT_DOCUMENT_HPP
#define QPT_RESULT_DOCUMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpt/linalg.hpp"
#include "qpt/tomography.hpp"

namespace qpt {

struct ElementRow {
  std::string label;
  double re = 0.0;
  double im = 0.0;
  double err_re = 0.0;
  double err_im = 0.0;
  std::optional<double> theory_re;
  std::optional<double> theory_im;
};

struct ResultDocument {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<ElementRow> elements;

  void set(const std::string &key, const std::string &value);
  std::optional<std::string> get(const std::string &key) const;
};

/// Element labels: U00.. for unitaries, Ψ00.. for states, C00.. for Choi
/// matrices (C0_15 style once an index exceeds 9).
std::string element_label(ReconstructionKind kind, Eigen::Index row, Eigen::Index col,
                          Eigen::Index dim);

/// Element table from a result; `theory` must match the matrix shape.
std::vector<ElementRow> element_rows(const ReconstructionResult &result,
                                     const std::optional<ComplexMatrix> &theory);

void write_result_document(std::ostream &out, const ResultDocument &doc);
/// Throws DataFormatError with line numbers.
ResultDocument read_result_document(std::istream &in);

/// Bar-chart table: element,part,estimate,error,theory with one row per
/// element and part, real part first.
void write_plot_data(std::ostream &out, const ResultDocument &doc);

std::string format_number(double x);

}  // namespace qpt

#endif  // QPT_RESULT_DOCUMENT_HPP
