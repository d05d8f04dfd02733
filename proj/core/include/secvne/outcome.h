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

#ifndef SECVNE_OUTCOME_H_
#define SECVNE_OUTCOME_H_

#include <string>
#include <utility>

#include "secvne/model.h"

namespace secvne {

enum class OutcomeKind { kEmbedded, kRejected, kBudgetExceeded };

// Result of one embedding attempt. `embedding` is meaningful only for
// kEmbedded and `reason` only for the other two kinds.
struct Outcome {
  OutcomeKind kind = OutcomeKind::kRejected;
  Embedding embedding;
  std::string reason;

  static Outcome Embedded(Embedding emb) {
    return {OutcomeKind::kEmbedded, std::move(emb), {}};
  }
  static Outcome Rejected(std::string reason) {
    return {OutcomeKind::kRejected, {}, std::move(reason)};
  }
  static Outcome BudgetExceeded(std::string reason) {
    return {OutcomeKind::kBudgetExceeded, {}, std::move(reason)};
  }

  bool embedded() const { return kind == OutcomeKind::kEmbedded; }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

}  // namespace secvne

#endif  // SECVNE_OUTCOME_H_
