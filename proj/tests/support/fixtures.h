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

// Hand-built instances shared by the tests.
//
// CF-1: clouds P (private, owner t1) and Q (public).
//   A cpu 10 sec 3 cloud P c 1   B cpu 10 sec 1 cloud Q c 1   C cpu 10 sec 2 cloud Q c 1
//   A-B bw 10 sec 2 c 1          B-C bw 10 sec 1 c 1          A-C bw 10 sec 3 c 2
// R1 (tenant t1): a cpu 2 sdem 2 trust 5, b cpu 2 sdem 0 trust 5,
//   a-b bw 1 sdem 2.
// CF-2 marks a sensitive; CF-3 gives a one backup copy under cross-cloud.

#ifndef SECVNE_TESTS_SUPPORT_FIXTURES_H_
#define SECVNE_TESTS_SUPPORT_FIXTURES_H_

#include <functional>
#include <string>
#include <vector>

#include "secvne/model.h"
#include "secvne/state.h"
#include "secvne/types.h"

namespace secvne::testing {

struct SubstrateParts {
  std::vector<Cloud> clouds;
  std::vector<SubstrateNode> nodes;
  std::vector<SubstrateLink> links;
  SubstrateNetwork Build() const { return SubstrateNetwork(clouds, nodes, links); }
};

struct RequestParts {
  std::string id = "R1";
  std::string tenant = "t1";
  std::vector<VirtualNode> nodes;
  std::vector<VirtualLink> links;
  VnRequest Build() const { return VnRequest(id, tenant, nodes, links); }
};

SubstrateParts Cf1Parts();
RequestParts R1Parts();

SubstrateNetwork Cf1();
VnRequest R1();
VnRequest R1Sensitive();  // CF-2
VnRequest R1Replicated();  // CF-3, pair with CrossCloudMode::kOn

ExpansionPolicy Policy(CrossCloudMode mode);

// hosts[i][k] and paths[l][p] name substrate ids.
Embedding MakeEmbedding(const SubstrateNetwork& substrate,
                        const std::vector<std::vector<std::string>>& hosts,
                        const std::vector<std::vector<std::vector<std::string>>>& paths);

// Directory holding the checked-in data files.
std::string DataPath(const std::string& name);
std::string ReadText(const std::string& path);

}  // namespace secvne::testing

#endif  // SECVNE_TESTS_SUPPORT_FIXTURES_H_
