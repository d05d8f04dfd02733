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

#include "secvne/formulation.h"

#include <algorithm>
#include <set>

namespace secvne {
namespace {

class ModelBuilder {
 public:
  ModelBuilder(const SubstrateNetwork& substrate, const SubstrateState& state,
               const ExpandedRequest& expanded)
      : substrate_(substrate), state_(state), expanded_(expanded), request_(expanded.request) {}

  MipModel Build() {
    AddNodeVariables();
    AddArcVariables();
    AddAssignment();
    AddCopyDistinctness();
    AddCrossCloud();
    AddConflicts();
    AddNodeCapacity();
    AddFlowConservation();
    AddAntiParallel();
    AddDisjointness();
    AddLinkCapacity();
    model_.reindex();
    return std::move(model_);
  }

 private:
  std::string Req() const { return sanitize_identifier(request_.id()); }
  std::string VNode(int i) const { return sanitize_identifier(request_.node(i).id); }
  std::string SNode(int u) const { return sanitize_identifier(substrate_.node(u).id); }
  std::string SLink(int e) const { return sanitize_identifier(substrate_.link(e).id); }
  std::string VLink(int l) const {
    auto [a, b] = request_.link_ends(l);
    return VNode(a) + "_" + VNode(b);
  }

  int AddVariable(MipVariable var) {
    if (!names_.insert(var.name).second) {
      throw InvalidInput("variable name collision after sanitizing: " + var.name);
    }
    model_.variables.push_back(std::move(var));
    return static_cast<int>(model_.variables.size()) - 1;
  }

  void AddConstraint(std::string name, std::vector<Term> terms, Sense sense, double rhs) {
    if (terms.empty()) return;
    if (!names_.insert(name).second) {
      throw InvalidInput("constraint name collision after sanitizing: " + name);
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.var < b.var; });
    model_.constraints.push_back({std::move(name), std::move(terms), sense, rhs});
  }

  void AddNodeVariables() {
    x_.assign(request_.num_nodes(), {});
    for (int i = 0; i < request_.num_nodes(); ++i) {
      x_[i].assign(expanded_.num_copies(i), std::vector<int>(substrate_.num_nodes(), -1));
      std::vector<bool> allowed(substrate_.num_nodes());
      for (int u = 0; u < substrate_.num_nodes(); ++u) {
        allowed[u] = !placement_filter(substrate_, state_, request_, i, u).has_value();
      }
      for (int k = 0; k < expanded_.num_copies(i); ++k) {
        for (int u = 0; u < substrate_.num_nodes(); ++u) {
          if (!allowed[u]) continue;
          MipVariable var;
          var.name = node_variable_name(request_, i, k, substrate_, u);
          var.role = VariableRole::kNodeAssign;
          var.vnode = i;
          var.copy = k;
          var.snode = u;
          const int idx = AddVariable(std::move(var));
          x_[i][k][u] = idx;
          model_.objective.push_back({request_.node(i).cpu * substrate_.node(u).unit_cost, idx});
        }
      }
    }
  }

  void AddArcVariables() {
    y_.assign(request_.num_links(), {});
    for (int l = 0; l < request_.num_links(); ++l) {
      const VirtualLink& vl = request_.link(l);
      y_[l].assign(expanded_.num_paths(l), std::vector<std::pair<int, int>>(
                                                substrate_.num_links(), {-1, -1}));
      for (int p = 0; p < expanded_.num_paths(l); ++p) {
        for (int e = 0; e < substrate_.num_links(); ++e) {
          const SubstrateLink& link = substrate_.link(e);
          if (link.sec < vl.sec_dem) continue;
          auto [a, b] = substrate_.link_ends(e);
          for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
            MipVariable var;
            var.name = arc_variable_name(request_, l, p, substrate_, from, to);
            var.role = VariableRole::kArcUse;
            var.vlink = l;
            var.path = p;
            var.link = e;
            var.from = from;
            var.to = to;
            const int idx = AddVariable(std::move(var));
            (from == a ? y_[l][p][e].first : y_[l][p][e].second) = idx;
            model_.objective.push_back({vl.bw * link.unit_cost, idx});
          }
        }
      }
    }
  }

  void AddAssignment() {
    for (const NodeCopy& c : expanded_.copies) {
      std::vector<Term> terms;
      for (int idx : x_[c.vnode][c.copy]) {
        if (idx >= 0) terms.push_back({1.0, idx});
      }
      std::string name = "c1_" + Req() + "_" + VNode(c.vnode) + "_" + std::to_string(c.copy);
      if (terms.empty()) {
        // No host survives the filters. The row stays, with an empty
        // left-hand side, so the model reports infeasibility.
        if (!names_.insert(name).second) {
          throw InvalidInput("constraint name collision after sanitizing: " + name);
        }
        model_.constraints.push_back({std::move(name), {}, Sense::kEqual, 1.0});
        continue;
      }
      AddConstraint(std::move(name), std::move(terms), Sense::kEqual, 1.0);
    }
  }

  void AddCopyDistinctness() {
    for (int i = 0; i < request_.num_nodes(); ++i) {
      if (expanded_.num_copies(i) < 2) continue;
      for (int u = 0; u < substrate_.num_nodes(); ++u) {
        std::vector<Term> terms;
        for (int k = 0; k < expanded_.num_copies(i); ++k) {
          if (x_[i][k][u] >= 0) terms.push_back({1.0, x_[i][k][u]});
        }
        if (terms.size() < 2) continue;
        AddConstraint("c2_" + Req() + "_" + VNode(i) + "__" + SNode(u), std::move(terms),
                      Sense::kLessEqual, 1.0);
      }
    }
  }

  void AddCrossCloud() {
    for (int i = 0; i < request_.num_nodes(); ++i) {
      if (!expanded_.cross_cloud_applies(i)) continue;
      for (int c = 0; c < static_cast<int>(substrate_.clouds().size()); ++c) {
        std::vector<Term> terms;
        for (int k = 0; k < expanded_.num_copies(i); ++k) {
          for (int u = 0; u < substrate_.num_nodes(); ++u) {
            if (substrate_.cloud_index_of(u) == c && x_[i][k][u] >= 0) {
              terms.push_back({1.0, x_[i][k][u]});
            }
          }
        }
        if (terms.size() < 2) continue;
        AddConstraint("c3_" + Req() + "_" + VNode(i) + "__" +
                          sanitize_identifier(substrate_.clouds()[c].id),
                      std::move(terms), Sense::kLessEqual, 1.0);
      }
    }
  }

  void AddConflicts() {
    for (const auto& [i, j] : request_.conflict_pairs()) {
      for (int u = 0; u < substrate_.num_nodes(); ++u) {
        std::vector<Term> terms;
        bool has_i = false;
        bool has_j = false;
        for (int k = 0; k < expanded_.num_copies(i); ++k) {
          if (x_[i][k][u] >= 0) {
            terms.push_back({1.0, x_[i][k][u]});
            has_i = true;
          }
        }
        for (int k = 0; k < expanded_.num_copies(j); ++k) {
          if (x_[j][k][u] >= 0) {
            terms.push_back({1.0, x_[j][k][u]});
            has_j = true;
          }
        }
        if (!has_i || !has_j) continue;
        AddConstraint("c4_" + Req() + "_" + VNode(i) + "_" + VNode(j) + "__" + SNode(u),
                      std::move(terms), Sense::kLessEqual, 1.0);
      }
    }
  }

  void AddNodeCapacity() {
    for (int u = 0; u < substrate_.num_nodes(); ++u) {
      std::vector<Term> terms;
      for (const NodeCopy& c : expanded_.copies) {
        const int idx = x_[c.vnode][c.copy][u];
        const double cpu = request_.node(c.vnode).cpu;
        if (idx >= 0 && cpu != 0.0) terms.push_back({cpu, idx});
      }
      AddConstraint("c5__" + SNode(u), std::move(terms), Sense::kLessEqual,
                    state_.residual_cpu(u));
    }
  }

  void AddFlowConservation() {
    for (const Commodity& c : expanded_.commodities) {
      auto [i, j] = request_.link_ends(c.vlink);
      for (int u = 0; u < substrate_.num_nodes(); ++u) {
        std::vector<Term> terms;
        for (const Incidence& inc : substrate_.incident(u)) {
          const auto& arcs = y_[c.vlink][c.path][inc.link];
          if (arcs.first < 0) continue;
          const bool u_is_first = substrate_.link_ends(inc.link).first == u;
          const int out = u_is_first ? arcs.first : arcs.second;
          const int in = u_is_first ? arcs.second : arcs.first;
          terms.push_back({1.0, out});
          terms.push_back({-1.0, in});
        }
        if (x_[i][0][u] >= 0) terms.push_back({-1.0, x_[i][0][u]});
        if (x_[j][0][u] >= 0) terms.push_back({1.0, x_[j][0][u]});
        AddConstraint("c6_" + Req() + "_" + VLink(c.vlink) + "_" + std::to_string(c.path) +
                          "__" + SNode(u),
                      std::move(terms), Sense::kEqual, 0.0);
      }
    }
  }

  void AddAntiParallel() {
    for (const Commodity& c : expanded_.commodities) {
      for (int e = 0; e < substrate_.num_links(); ++e) {
        const auto& arcs = y_[c.vlink][c.path][e];
        if (arcs.first < 0) continue;
        AddConstraint("c7_" + Req() + "_" + VLink(c.vlink) + "_" + std::to_string(c.path) +
                          "__" + SLink(e),
                      {{1.0, arcs.first}, {1.0, arcs.second}}, Sense::kLessEqual, 1.0);
      }
    }
  }

  void AddDisjointness() {
    for (int l = 0; l < request_.num_links(); ++l) {
      if (expanded_.num_paths(l) < 2) continue;
      for (int e = 0; e < substrate_.num_links(); ++e) {
        std::vector<Term> terms;
        for (int p = 0; p < expanded_.num_paths(l); ++p) {
          const auto& arcs = y_[l][p][e];
          if (arcs.first < 0) continue;
          terms.push_back({1.0, arcs.first});
          terms.push_back({1.0, arcs.second});
        }
        AddConstraint("c8_" + Req() + "_" + VLink(l) + "__" + SLink(e), std::move(terms),
                      Sense::kLessEqual, 1.0);
      }
    }
  }

  void AddLinkCapacity() {
    for (int e = 0; e < substrate_.num_links(); ++e) {
      std::vector<Term> terms;
      for (const Commodity& c : expanded_.commodities) {
        const auto& arcs = y_[c.vlink][c.path][e];
        const double bw = request_.link(c.vlink).bw;
        if (arcs.first < 0 || bw == 0.0) continue;
        terms.push_back({bw, arcs.first});
        terms.push_back({bw, arcs.second});
      }
      AddConstraint("c9__" + SLink(e), std::move(terms), Sense::kLessEqual,
                    state_.residual_bw(e));
    }
  }

  const SubstrateNetwork& substrate_;
  const SubstrateState& state_;
  const ExpandedRequest& expanded_;
  const VnRequest& request_;
  MipModel model_;
  std::set<std::string> names_;
  // x_[i][k][u] -> variable index or -1.
  std::vector<std::vector<std::vector<int>>> x_;
  // y_[l][p][e] -> (index of first->second arc, index of second->first arc).
  std::vector<std::vector<std::vector<std::pair<int, int>>>> y_;
};

double Evaluate(const std::vector<Term>& terms, std::span<const int> values) {
  double sum = 0.0;
  for (const Term& t : terms) sum += t.coef * values[t.var];
  return sum;
}

bool Holds(double lhs, Sense sense, double rhs) {
  switch (sense) {
    case Sense::kLessEqual: return lhs <= rhs;
    case Sense::kEqual: return lhs == rhs;
    case Sense::kGreaterEqual: return lhs >= rhs;
  }
  return false;
}

}  // namespace

std::optional<int> MipModel::find_variable(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void MipModel::reindex() {
  by_name_.clear();
  for (int v = 0; v < static_cast<int>(variables.size()); ++v) {
    by_name_.emplace(variables[v].name, v);
  }
}

std::string sanitize_identifier(std::string_view id) {
  std::string out(id);
  for (char& ch : out) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) ch = '_';
  }
  return out;
}

std::string node_variable_name(const VnRequest& request, int vnode, int copy,
                               const SubstrateNetwork& substrate, int snode) {
  return "x_" + sanitize_identifier(request.id()) + "_" +
         sanitize_identifier(request.node(vnode).id) + "_" + std::to_string(copy) + "__" +
         sanitize_identifier(substrate.node(snode).id);
}

std::string arc_variable_name(const VnRequest& request, int vlink, int path,
                              const SubstrateNetwork& substrate, int from, int to) {
  auto [a, b] = request.link_ends(vlink);
  return "y_" + sanitize_identifier(request.id()) + "_" +
         sanitize_identifier(request.node(a).id) + "_" +
         sanitize_identifier(request.node(b).id) + "_" + std::to_string(path) + "__" +
         sanitize_identifier(substrate.node(from).id) + "__" +
         sanitize_identifier(substrate.node(to).id);
}

MipModel build_model(const SubstrateNetwork& substrate, const SubstrateState& state,
                     const ExpandedRequest& expanded) {
  return ModelBuilder(substrate, state, expanded).Build();
}

FilteredVariable::FilteredVariable(std::string variable, ViolationCode filter)
    : Error("variable " + variable + " does not exist: removed by filter " +
            std::string(to_string(filter))),
      variable_(std::move(variable)),
      filter_(filter) {}

Assignment embedding_to_assignment(const SubstrateNetwork& substrate,
                                   const SubstrateState& state,
                                   const ExpandedRequest& expanded, const MipModel& model,
                                   const Embedding& emb) {
  const VnRequest& request = expanded.request;
  Assignment out;
  for (const MipVariable& var : model.variables) out[var.name] = 0;

  if (static_cast<int>(emb.node_map.size()) != request.num_nodes() ||
      static_cast<int>(emb.link_map.size()) != request.num_links()) {
    throw InvalidInput("embedding shape does not match request '" + request.id() + "'");
  }
  for (const NodeCopy& c : expanded.copies) {
    const int u = emb.node_map[c.vnode].at(c.copy);
    if (u < 0 || u >= substrate.num_nodes()) {
      throw UnknownId("unknown substrate node index " + std::to_string(u));
    }
    std::string name = node_variable_name(request, c.vnode, c.copy, substrate, u);
    if (!model.find_variable(name)) {
      auto filter = placement_filter(substrate, state, request, c.vnode, u);
      throw FilteredVariable(std::move(name), filter.value_or(ViolationCode::kNodeSecurity));
    }
    out[name] = 1;
  }
  for (const Commodity& c : expanded.commodities) {
    const auto& path = emb.link_map[c.vlink].at(c.path);
    const int source = path_source(expanded, emb, c.vlink);
    auto nodes = path_nodes(substrate, source, path);
    if (!nodes) {
      throw InvalidInput("path " + std::to_string(c.path) + " of virtual link " +
                         std::to_string(c.vlink) + " is not a walk");
    }
    for (std::size_t s = 0; s < path.size(); ++s) {
      std::string name =
          arc_variable_name(request, c.vlink, c.path, substrate, (*nodes)[s], (*nodes)[s + 1]);
      if (!model.find_variable(name)) {
        throw FilteredVariable(std::move(name), ViolationCode::kPathSecurity);
      }
      out[name] = 1;
    }
  }
  return out;
}

AssignmentCheck check_assignment(const MipModel& model, std::span<const int> values) {
  if (values.size() != model.variables.size()) {
    throw Error("assignment has " + std::to_string(values.size()) + " values for " +
                std::to_string(model.variables.size()) + " variables");
  }
  AssignmentCheck out;
  out.objective = Evaluate(model.objective, values);
  for (const LinearConstraint& row : model.constraints) {
    if (!Holds(Evaluate(row.terms, values), row.sense, row.rhs)) {
      out.violated.push_back(row.name);
    }
  }
  out.feasible = out.violated.empty();
  return out;
}

AssignmentCheck check_assignment(const MipModel& model, const Assignment& assignment) {
  std::vector<int> values(model.variables.size(), 0);
  for (std::size_t v = 0; v < model.variables.size(); ++v) {
    auto it = assignment.find(model.variables[v].name);
    if (it == assignment.end()) {
      throw Error("assignment is missing variable " + model.variables[v].name);
    }
    values[v] = it->second;
  }
  return check_assignment(model, values);
}

}  // namespace secvne
