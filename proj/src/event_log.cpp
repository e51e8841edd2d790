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

#include "qpt/event_log.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "qpt/errors.hpp"

namespace qpt {

namespace {

constexpr char kAxisLetters[] = "Ixyz";

const char *sign_text(int s) { return s > 0 ? "+1" : "-1"; }

void write_header(std::ostream &out, const EventLogHeader &header) {
  char eta[32];
  std::snprintf(eta, sizeof eta, "%.12g", header.eta);
  out << "# coincidences=" << header.coincidences << " seed=" << header.seed << " eta=" << eta;
  if (header.parties != 2) {
    out << " parties=" << header.parties;
  }
  out << '\n';
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto comma = line.find(',');
    std::string_view f = line.substr(0, comma);
    while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) f.remove_prefix(1);
    while (!f.empty() && (f.back() == ' ' || f.back() == '\t' || f.back() == '\r')) f.remove_suffix(1);
    fields.push_back(f);
    if (comma == std::string_view::npos) {
      break;
    }
    line.remove_prefix(comma + 1);
  }
  return fields;
}

int parse_axis(std::string_view f, std::size_t line) {
  if (f.size() == 1) {
    switch (f[0]) {
      case 'x': return 1;
      case 'y': return 2;
      case 'z': return 3;
      default: break;
    }
  }
  throw DataFormatError("invalid axis '" + std::string(f) + "', expected x|y|z", line);
}

int parse_sign(std::string_view f, std::size_t line) {
  if (f == "+1") return 1;
  if (f == "-1") return -1;
  throw DataFormatError("invalid sign '" + std::string(f) + "', expected +1|-1", line);
}

template <typename T>
T parse_value(std::string_view text, std::string_view key, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataFormatError("bad header value for '" + std::string(key) + "'", line);
  }
  return value;
}

EventLogHeader parse_header(const std::string &line) {
  if (line.rfind('#', 0) != 0) {
    throw DataFormatError("missing '# coincidences=... seed=... eta=...' header", 1);
  }
  EventLogHeader header;
  bool have_count = false, have_seed = false, have_eta = false;
  std::istringstream tokens(line.substr(1));
  std::string tok;
  while (tokens >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) {
      throw DataFormatError("header token '" + tok + "' is not key=value", 1);
    }
    const std::string_view key(tok.data(), eq);
    const std::string_view val(tok.data() + eq + 1, tok.size() - eq - 1);
    if (key == "coincidences") {
      header.coincidences = parse_value<std::uint64_t>(val, key, 1);
      have_count = true;
    } else if (key == "seed") {
      header.seed = parse_value<std::uint64_t>(val, key, 1);
      have_seed = true;
    } else if (key == "eta") {
      header.eta = parse_value<double>(val, key, 1);
      have_eta = true;
    } else if (key == "parties") {
      header.parties = parse_value<int>(val, key, 1);
    } else {
      throw DataFormatError("unknown header key '" + std::string(key) + "'", 1);
    }
  }
  if (!have_count || !have_seed || !have_eta) {
    throw DataFormatError("header must carry coincidences, seed and eta", 1);
  }
  if (header.parties < 2 || header.parties > 6) {
    throw DataFormatError("parties must lie in 2..6", 1);
  }
  return header;
}

}  // namespace

void write_event_log(std::ostream &out, const EventLogHeader &header,
                     std::span<const EventRecord> events) {
  EventLogHeader h = header;
  h.parties = 2;
  write_header(out, h);
  for (const auto &e : events) {
    out << kAxisLetters[e.setting.axis1().value()] << ',' << kAxisLetters[e.setting.axis2().value()]
        << ',' << sign_text(e.s1) << ',' << sign_text(e.s2) << '\n';
  }
}

void write_event_log(std::ostream &out, const EventLogHeader &header,
                     std::span<const MultiPartyEvent> events) {
  write_header(out, header);
  for (const auto &e : events) {
    for (int a : e.axes) {
      out << kAxisLetters[a] << ',';
    }
    for (std::size_t k = 0; k < e.signs.size(); ++k) {
      out << sign_text(e.signs[k]) << (k + 1 < e.signs.size() ? "," : "\n");
    }
  }
}

EventLog read_event_log(std::istream &in) {
  EventLog log;
  std::string line;
  if (!std::getline(in, line)) {
    throw DataFormatError("empty event log", 0);
  }
  log.header = parse_header(line);
  const int q = log.header.parties;
  std::size_t lineno = 1;
  std::uint64_t n = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") {
      continue;
    }
    const auto fields = split_fields(line);
    if (static_cast<int>(fields.size()) != 2 * q) {
      throw DataFormatError("expected " + std::to_string(2 * q) + " comma-separated fields, got " +
                                std::to_string(fields.size()),
                            lineno);
    }
    if (q == 2) {
      log.events.push_back({MeasurementSetting(parse_axis(fields[0], lineno),
                                               parse_axis(fields[1], lineno)),
                            parse_sign(fields[2], lineno), parse_sign(fields[3], lineno)});
    } else {
      MultiPartyEvent ev{std::vector<int>(q), std::vector<int>(q)};
      for (int k = 0; k < q; ++k) {
        ev.axes[k] = parse_axis(fields[k], lineno);
        ev.signs[k] = parse_sign(fields[q + k], lineno);
      }
      log.multi_events.push_back(std::move(ev));
    }
    ++n;
  }
  if (n != log.header.coincidences) {
    throw DataFormatError("header announces " + std::to_string(log.header.coincidences) +
                              " coincidences but the log holds " + std::to_string(n),
                          0);
  }
  return log;
}

}  // namespace qpt
