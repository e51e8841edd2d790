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

#include "qpt/result_document.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr char kTableHeader[] = "label,re,im,err_re,err_im,theory_re,theory_im";

std::string cell(const std::optional<double> &x) { return x ? format_number(*x) : ""; }

std::optional<double> parse_cell(std::string_view f, std::size_t line, bool allow_empty) {
  if (f.empty()) {
    if (allow_empty) {
      return std::nullopt;
    }
    throw DataFormatError("empty numeric field", line);
  }
  if (f.front() == '+') {
    f.remove_prefix(1);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (ec != std::errc() || ptr != f.data() + f.size()) {
    throw DataFormatError("'" + std::string(f) + "' is not a number", line);
  }
  return v;
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) {
    return "0";  // no "-0"
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void ResultDocument::set(const std::string &key, const std::string &value) {
  for (auto &[k, v] : header) {
    if (k == key) {
      v = value;
      return;
    }
  }
  header.emplace_back(key, value);
}

std::optional<std::string> ResultDocument::get(const std::string &key) const {
  for (const auto &[k, v] : header) {
    if (k == key) {
      return v;
    }
  }
  return std::nullopt;
}

std::string element_label(ReconstructionKind kind, Eigen::Index row, Eigen::Index col,
                          Eigen::Index dim) {
  std::string prefix;
  switch (kind) {
    case ReconstructionKind::kDeviceUnitary:
      prefix = "U";
      break;
    case ReconstructionKind::kInputState:
      prefix = "Ψ";
      break;
    case ReconstructionKind::kDeviceChoi:
      prefix = "C";
      break;
  }
  const std::string sep = dim > 10 ? "_" : "";
  return prefix + std::to_string(row) + sep + std::to_string(col);
}

std::vector<ElementRow> element_rows(const ReconstructionResult &result,
                                     const std::optional<ComplexMatrix> &theory) {
  const ComplexMatrix &m = result.matrix;
  if (theory && (theory->rows() != m.rows() || theory->cols() != m.cols())) {
    throw std::invalid_argument("element_rows: theory shape mismatch");
  }
  std::vector<ElementRow> rows;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      ElementRow row;
      row.label = element_label(result.kind, r, c, m.rows());
      row.re = m(r, c).real();
      row.im = m(r, c).imag();
      row.err_re = result.error_re(r, c);
      row.err_im = result.error_im(r, c);
      if (theory) {
        row.theory_re = (*theory)(r, c).real();
        row.theory_im = (*theory)(r, c).imag();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_result_document(std::ostream &out, const ResultDocument &doc) {
  for (const auto &[k, v] : doc.header) {
    out << k << ": " << v << '\n';
  }
  out << '\n' << kTableHeader << '\n';
  for (const auto &e : doc.elements) {
    out << e.label << ',' << format_number(e.re) << ',' << format_number(e.im) << ','
        << format_number(e.err_re) << ',' << format_number(e.err_im) << ',' << cell(e.theory_re)
        << ',' << cell(e.theory_im) << '\n';
  }
}

ResultDocument read_result_document(std::istream &in) {
  ResultDocument doc;
  std::string line;
  std::size_t lineno = 0;
  bool in_table = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!in_table) {
      if (line.empty()) {
        continue;
      }
      if (line == kTableHeader) {
        in_table = true;
        continue;
      }
      const auto colon = line.find(": ");
      if (colon == std::string::npos || colon == 0) {
        throw DataFormatError("expected 'key: value' or the element table header", lineno);
      }
      doc.header.emplace_back(line.substr(0, colon), line.substr(colon + 2));
      continue;
    }
    if (line.empty()) {
      continue;
    }
    std::vector<std::string_view> f;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      f.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (f.size() != 7) {
      throw DataFormatError("element rows need 7 fields, got " + std::to_string(f.size()),
                            lineno);
    }
    ElementRow row;
    row.label = std::string(f[0]);
    row.re = *parse_cell(f[1], lineno, false);
    row.im = *parse_cell(f[2], lineno, false);
    row.err_re = *parse_cell(f[3], lineno, false);
    row.err_im = *parse_cell(f[4], lineno, false);
    row.theory_re = parse_cell(f[5], lineno, true);
    row.theory_im = parse_cell(f[6], lineno, true);
    doc.elements.push_back(std::move(row));
  }
  if (!in_table) {
    throw DataFormatError("result document has no element table", lineno);
  }
  if (doc.elements.empty()) {
    throw DataFormatError("result document has no elements", lineno);
  }
  return doc;
}

void write_plot_data(std::ostream &out, const ResultDocument &doc) {
  out << "element,part,estimate,error,theory\n";
  for (const auto &e : doc.elements) {
    out << e.label << ",re," << format_number(e.re) << ',' << format_number(e.err_re) << ','
        << cell(e.theory_re) << '\n';
    out << e.label << ",im," << format_number(e.im) << ',' << format_number(e.err_im) << ','
        << cell(e.theory_im) << '\n';
  }
}

}  // namespace qpt
