// Copyright 2026 The secvne Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON documents and the metrics CSV. See docs/formats.md for the schemas.
//
// Parsers are strict: unknown fields, wrong types and dangling references
// raise InvalidInput with the offending field path, e.g. "nodes[2].cloud".
// Writers are byte-stable and parse(write(x)) == x.

#ifndef SECVNE_IO_H_
#define SECVNE_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "secvne/outcome.h"
#include "secvne/sim.h"

namespace secvne {

inline constexpr int kFormatVersion = 1;

SubstrateNetwork parse_substrate(std::string_view text);
std::string write_substrate(const SubstrateNetwork& substrate);

VnRequest parse_request(std::string_view text);
std::string write_request(const VnRequest& request);

// Embedded outcomes carry node_map, link_map, cost and revenue; the other
// kinds carry only a reason.
std::string write_outcome(const SubstrateNetwork& substrate, const VnRequest& request,
                          const Outcome& outcome);
// Resolves ids against the given networks. An embedded document must name
// every copy and every path of the request exactly once.
Outcome parse_outcome(std::string_view text, const SubstrateNetwork& substrate,
                      const VnRequest& request);

// {"format":1,"valid":...,"violations":[{"code","detail"}]}
std::string write_violations(const std::vector<Violation>& violations);

// Header, one row per trace event, then a "# summary" block of key,value
// lines.
std::string write_metrics_csv(const Metrics& metrics);

std::string_view to_string(OutcomeKind kind);
std::string_view to_string(TraceStatus status);
std::string_view to_string(EventKind kind);

}  // namespace secvne

#endif  // SECVNE_IO_H_
