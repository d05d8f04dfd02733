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

#ifndef SECVNE_TESTS_SUPPORT_VIOLATION_MATRIX_H_
#define SECVNE_TESTS_SUPPORT_VIOLATION_MATRIX_H_

#include <vector>

#include "secvne/model.h"
#include "secvne/state.h"

namespace secvne::testing {

// One CF-1 variant per violation code whose embedding breaks that rule and
// nothing else.
struct MatrixFixture {
  ViolationCode code;
  SubstrateNetwork substrate;
  SubstrateState state;
  ExpandedRequest expanded;
  Embedding embedding;
};

std::vector<MatrixFixture> ViolationMatrix();

}  // namespace secvne::testing

#endif  // SECVNE_TESTS_SUPPORT_VIOLATION_MATRIX_H_
