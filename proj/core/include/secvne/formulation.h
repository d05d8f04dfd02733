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

// Binary program for embedding one expanded request.
//
// Variables
//   x_<req>_<vnode>_<k>__<snode>         copy k of vnode sits on snode
//   y_<req>_<va>_<vb>_<p>__<su>__<sv>    path p of link (va,vb) uses arc su->sv
// exist only where the hard filters allow them (host security, trust,
// sensitivity and tenant avoidance for x; link security for y).
//
// Constraint families, emitted in this order:
//   c1  each copy assigned exactly once
//   c2  copies of one vnode on distinct substrate nodes
//   c3  copies of one vnode on distinct clouds (cross-cloud policy, rep >= 1)
//   c4  declared conflicts never share a substrate node
//   c5  node cpu capacity against the residual state
//   c6  flow conservation per commodity and substrate node
//   c7  a commodity uses at most one orientation of a link
//   c8  paths of one virtual link are link-disjoint (rep >= 1)
//   c9  link bandwidth capacity against the residual state
// Objective: minimize sum cpu * c(u) * x + sum bw * c(uv) * y.

#ifndef SECVNE_FORMULATION_H_
#define SECVNE_FORMULATION_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "secvne/model.h"

namespace secvne {

enum class VariableRole { kNodeAssign, kArcUse };

struct MipVariable {
  std::string name;
  VariableRole role = VariableRole::kNodeAssign;
  // kNodeAssign: vnode, copy, snode.
  int vnode = -1;
  int copy = -1;
  int snode = -1;
  // kArcUse: vlink, path, link, and the arc orientation from -> to.
  int vlink = -1;
  int path = -1;
  int link = -1;
  int from = -1;
  int to = -1;
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct Term {
  double coef = 0.0;
  // Index into MipModel::variables.
  int var = 0;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
};

// All variables are binary; the objective is minimized.
struct MipModel {
  std::vector<MipVariable> variables;
  std::vector<LinearConstraint> constraints;
  std::vector<Term> objective;

  std::optional<int> find_variable(std::string_view name) const;

  // Rebuilds the name index; call after editing `variables` by hand.
  void reindex();

 private:
  std::unordered_map<std::string, int> by_name_;
};

// Replaces every character outside [A-Za-z0-9_] with '_'.
std::string sanitize_identifier(std::string_view id);

std::string node_variable_name(const VnRequest& request, int vnode, int copy,
                               const SubstrateNetwork& substrate, int snode);
std::string arc_variable_name(const VnRequest& request, int vlink, int path,
                              const SubstrateNetwork& substrate, int from, int to);

// Throws InvalidInput if sanitized names collide.
MipModel build_model(const SubstrateNetwork& substrate, const SubstrateState& state,
                     const ExpandedRequest& expanded);

// Longest identifier accepted by export_lp.
inline constexpr std::size_t kMaxLpNameLength = 255;

class LpFormatError : public Error {
 public:
  using Error::Error;
};

// Stands in for the missing terms of rows whose variables were all filtered.
inline constexpr std::string_view kPlaceholderVariable = "nil";

// CPLEX LP text: Minimize / Subject To / Binary / End. Byte-stable.
std::string export_lp(const MipModel& model);

using Assignment = std::map<std::string, int>;

// Raised when an embedding needs a variable that a hard filter removed.
class FilteredVariable : public Error {
 public:
  FilteredVariable(std::string variable, ViolationCode filter);
  const std::string& variable() const { return variable_; }
  ViolationCode filter() const { return filter_; }

 private:
  std::string variable_;
  ViolationCode filter_;
};

// Translates an embedding into 0/1 values for every model variable. Paths are
// oriented from the primary host of the link's first endpoint.
Assignment embedding_to_assignment(const SubstrateNetwork& substrate,
                                   const SubstrateState& state,
                                   const ExpandedRequest& expanded, const MipModel& model,
                                   const Embedding& emb);

struct AssignmentCheck {
  bool feasible = false;
  double objective = 0.0;
  std::vector<std::string> violated;
};

// Throws Error if the assignment lacks a model variable.
AssignmentCheck check_assignment(const MipModel& model, const Assignment& assignment);
// Same, with values aligned to model.variables.
AssignmentCheck check_assignment(const MipModel& model, std::span<const int> values);

}  // namespace secvne

#endif  // SECVNE_FORMULATION_H_
