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

#ifndef QPT_EVENT_LOG_HPP
#define QPT_EVENT_LOG_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qpt/experiment.hpp"
#include "qpt/multi_party.hpp"

namespace qpt {

// Event log format, one coincidence per line:
//
//   # coincidences=8000 seed=42 eta=1
//   x,z,+1,-1
//   ...
//
// Axes are x|y|z, signs +1|-1. Logs from multi-pair runs carry
// `parties=q` in the header and q axes followed by q signs per line.

struct EventLogHeader {
  std::uint64_t coincidences = 0;
  std::uint64_t seed = 0;
  double eta = 1.0;
  int parties = 2;
};

void write_event_log(std::ostream &out, const EventLogHeader &header,
                     std::span<const EventRecord> events);
void write_event_log(std::ostream &out, const EventLogHeader &header,
                     std::span<const MultiPartyEvent> events);

struct EventLog {
  EventLogHeader header;
  /// Filled when header.parties == 2.
  std::vector<EventRecord> events;
  /// Filled when header.parties != 2.
  std::vector<MultiPartyEvent> multi_events;
};

/// Throws DataFormatError with the 1-based line number of the first
/// malformed line, or when the line count disagrees with the header.
EventLog read_event_log(std::istream &in);

}  // namespace qpt

#endif  // QPT_EVENT_LOG_HPP
