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

#include "support/violation_matrix.h"

#include "support/fixtures.h"

namespace secvne::testing {
namespace {

MatrixFixture Make(ViolationCode code, const SubstrateParts& s, const RequestParts& r,
                   CrossCloudMode mode, const std::vector<std::vector<std::string>>& hosts,
                   const std::vector<std::vector<std::vector<std::string>>>& paths) {
  SubstrateNetwork substrate = s.Build();
  SubstrateState state(substrate);
  Embedding emb = MakeEmbedding(substrate, hosts, paths);
  return {code, substrate, std::move(state), expand_request(r.Build(), Policy(mode)),
          std::move(emb)};
}

}  // namespace

std::vector<MatrixFixture> ViolationMatrix() {
  const auto off = CrossCloudMode::kOff;
  const auto on = CrossCloudMode::kOn;
  const SubstrateParts cf1 = Cf1Parts();
  std::vector<MatrixFixture> out;

  RequestParts r = R1Parts();
  r.nodes[0].cpu = 11;
  out.push_back(Make(ViolationCode::kNodeCapacity, cf1, r, off, {{"A"}, {"B"}}, {{{"A-B"}}}));

  r = R1Parts();
  r.links[0].bw = 11;
  out.push_back(Make(ViolationCode::kLinkCapacity, cf1, r, off, {{"A"}, {"B"}}, {{{"A-B"}}}));

  out.push_back(
      Make(ViolationCode::kNodeSecurity, cf1, R1Parts(), off, {{"B"}, {"A"}}, {{{"A-B"}}}));

  SubstrateParts harsh = Cf1Parts();
  harsh.nodes[1].trust_req = SecurityLevel(6);
  out.push_back(
      Make(ViolationCode::kTrustHarm, harsh, R1Parts(), off, {{"A"}, {"B"}}, {{{"A-B"}}}));

  r = R1Parts();
  r.nodes[0].conflicts = {"b"};
  out.push_back(Make(ViolationCode::kCoHostConflict, cf1, r, off, {{"A"}, {"A"}}, {{{}}}));

  out.push_back(Make(ViolationCode::kPathSecurity, cf1, R1Parts(), off, {{"A"}, {"C"}},
                     {{{"A-B", "B-C"}}}));

  r = R1Parts();
  r.nodes[0].sensitive = true;
  out.push_back(Make(ViolationCode::kSensitivity, cf1, r, off, {{"C"}, {"A"}}, {{{"A-C"}}}));

  r = R1Parts();
  r.nodes[0].rep = 1;
  out.push_back(
      Make(ViolationCode::kNodeReplication, cf1, r, off, {{"A", "A"}, {"B"}}, {{{"A-B"}}}));

  r = R1Parts();
  r.nodes[1].rep = 1;
  out.push_back(Make(ViolationCode::kCrossCloud, cf1, r, on, {{"A"}, {"B", "C"}}, {{{"A-B"}}}));

  r = R1Parts();
  r.links[0].rep = 1;
  out.push_back(Make(ViolationCode::kLinkReplication, cf1, r, off, {{"A"}, {"B"}},
                     {{{"A-B"}, {"A-B"}}}));

  out.push_back(
      Make(ViolationCode::kPathConnectivity, cf1, R1Parts(), off, {{"A"}, {"B"}}, {{{"A-C"}}}));

  // b avoids t2, which already has a workload on B.
  r = R1Parts();
  r.nodes[1].avoid_tenants = {"t2"};
  MatrixFixture avoid =
      Make(ViolationCode::kTenantAvoidance, cf1, r, off, {{"A"}, {"B"}}, {{{"A-B"}}});
  VirtualNode x;
  x.id = "x";
  x.cpu = 1;
  const VnRequest resident("R0", "t2", {x}, {});
  apply_embedding(avoid.state, avoid.substrate, expand_request(resident),
                  MakeEmbedding(avoid.substrate, {{"B"}}, {}));
  out.push_back(std::move(avoid));
  return out;
}

}  // namespace secvne::testing
