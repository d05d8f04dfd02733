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

#include "support/fixtures.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace secvne::testing {

SubstrateParts Cf1Parts() {
  SubstrateParts p;
  p.clouds = {{"P", CloudKind::kPrivate, "t1"}, {"Q", CloudKind::kPublic, std::nullopt}};
  p.nodes = {
      {"A", 10, SecurityLevel(3), SecurityLevel(0), "P", 1},
      {"B", 10, SecurityLevel(1), SecurityLevel(0), "Q", 1},
      {"C", 10, SecurityLevel(2), SecurityLevel(0), "Q", 1},
  };
  p.links = {
      {"A-B", {"A", "B"}, 10, SecurityLevel(2), 1},
      {"B-C", {"B", "C"}, 10, SecurityLevel(1), 1},
      {"A-C", {"A", "C"}, 10, SecurityLevel(3), 2},
  };
  return p;
}

RequestParts R1Parts() {
  RequestParts r;
  VirtualNode a;
  a.id = "a";
  a.cpu = 2;
  a.sec_dem = SecurityLevel(2);
  a.trust = SecurityLevel(5);
  VirtualNode b;
  b.id = "b";
  b.cpu = 2;
  b.trust = SecurityLevel(5);
  r.nodes = {a, b};
  r.links = {{{"a", "b"}, 1, SecurityLevel(2), 0}};
  return r;
}

SubstrateNetwork Cf1() { return Cf1Parts().Build(); }
VnRequest R1() { return R1Parts().Build(); }

VnRequest R1Sensitive() {
  RequestParts r = R1Parts();
  r.nodes[0].sensitive = true;
  return r.Build();
}

VnRequest R1Replicated() {
  RequestParts r = R1Parts();
  r.nodes[0].rep = 1;
  return r.Build();
}

ExpansionPolicy Policy(CrossCloudMode mode) {
  ExpansionPolicy policy;
  policy.cross_cloud = mode;
  return policy;
}

Embedding MakeEmbedding(const SubstrateNetwork& substrate,
                        const std::vector<std::vector<std::string>>& hosts,
                        const std::vector<std::vector<std::vector<std::string>>>& paths) {
  Embedding emb;
  for (const auto& copies : hosts) {
    emb.node_map.emplace_back();
    for (const std::string& h : copies) emb.node_map.back().push_back(substrate.node_index(h));
  }
  for (const auto& vlink : paths) {
    emb.link_map.emplace_back();
    for (const auto& path : vlink) {
      Path p;
      for (const std::string& id : path) p.push_back(substrate.link_index(id));
      emb.link_map.back().push_back(p);
    }
  }
  return emb;
}

std::string DataPath(const std::string& name) {
  return std::string(SECVNE_TEST_DATA_DIR) + "/" + name;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace secvne::testing
