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

#include "secvne/io.h"

#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "secvne/format.h"

namespace secvne {
namespace {

using Json = nlohmann::ordered_json;

// Integral values are written as JSON integers so documents stay readable.
Json Number(double value) {
  if (std::isfinite(value) && value == std::floor(value) && std::fabs(value) < 9.0e15) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json ParseText(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

// Reads one JSON object and rejects fields nobody asked for.
class Fields {
 public:
  Fields(const Json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw InvalidInput(Where() + ": expected an object");
  }

  std::string Where(std::string_view key = {}) const {
    if (key.empty()) return path_.empty() ? "document" : path_;
    return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
  }

  const Json* Find(const std::string& key) {
    seen_.insert(key);
    auto it = object_.find(key);
    return it == object_.end() ? nullptr : &*it;
  }

  const Json& Require(const std::string& key) {
    const Json* v = Find(key);
    if (!v) throw InvalidInput(Where(key) + ": missing field");
    return *v;
  }

  std::string String(const std::string& key) { return AsString(Require(key), Where(key)); }

  double Double(const std::string& key) { return AsDouble(Require(key), Where(key)); }

  std::optional<double> OptDouble(const std::string& key) {
    const Json* v = Find(key);
    if (!v) return std::nullopt;
    return AsDouble(*v, Where(key));
  }

  int Int(const std::string& key, std::optional<int> fallback = std::nullopt) {
    const Json* v = Find(key);
    if (!v) {
      if (fallback) return *fallback;
      throw InvalidInput(Where(key) + ": missing field");
    }
    return AsInt(*v, Where(key));
  }

  bool Bool(const std::string& key, bool fallback) {
    const Json* v = Find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw InvalidInput(Where(key) + ": expected true or false");
    return v->get<bool>();
  }

  const Json& Array(const std::string& key, bool required = true) {
    static const Json kEmpty = Json::array();
    const Json* v = Find(key);
    if (!v) {
      if (required) throw InvalidInput(Where(key) + ": missing field");
      return kEmpty;
    }
    if (!v->is_array()) throw InvalidInput(Where(key) + ": expected an array");
    return *v;
  }

  std::pair<std::string, std::string> Pair(const std::string& key) {
    const Json& v = Array(key);
    if (v.size() != 2) throw InvalidInput(Where(key) + ": expected two ids");
    return {AsString(v[0], Where(key) + "[0]"), AsString(v[1], Where(key) + "[1]")};
  }

  void CheckFormat() {
    if (Int("format") != kFormatVersion) {
      throw InvalidInput(Where("format") + ": unsupported version");
    }
  }

  // Call once every expected field has been read.
  void Done() const {
    for (auto it = object_.begin(); it != object_.end(); ++it) {
      if (!seen_.count(it.key())) throw InvalidInput(Where(it.key()) + ": unknown field");
    }
  }

  static std::string AsString(const Json& v, const std::string& where) {
    if (!v.is_string()) throw InvalidInput(where + ": expected a string");
    return v.get<std::string>();
  }

  static double AsDouble(const Json& v, const std::string& where) {
    if (!v.is_number()) throw InvalidInput(where + ": expected a number");
    return v.get<double>();
  }

  static int AsInt(const Json& v, const std::string& where) {
    if (v.is_number_integer()) {
      const auto x = v.get<std::int64_t>();
      if (x >= -(1LL << 31) && x < (1LL << 31)) return static_cast<int>(x);
    }
    throw InvalidInput(where + ": expected an integer");
  }

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string Indexed(std::string_view base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

// Prefixes constructor diagnostics so the reader knows which document failed.
template <typename T, typename F>
T Construct(const char* what, F&& make) {
  try {
    return make();
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(what) + ": " + e.what());
  }
}

Json PathIds(const SubstrateNetwork& substrate, const Path& path) {
  Json ids = Json::array();
  for (int e : path) ids.push_back(substrate.link(e).id);
  return ids;
}

}  // namespace

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kEmbedded:
      return "embedded";
    case OutcomeKind::kRejected:
      return "rejected";
    case OutcomeKind::kBudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

std::string_view to_string(TraceStatus status) {
  switch (status) {
    case TraceStatus::kAccepted:
      return "accepted";
    case TraceStatus::kRejected:
      return "rejected";
    case TraceStatus::kBudgetExceeded:
      return "budget_exceeded";
    case TraceStatus::kReleased:
      return "released";
  }
  return "?";
}

std::string_view to_string(EventKind kind) {
  return kind == EventKind::kArrival ? "arrival" : "departure";
}

SubstrateNetwork parse_substrate(std::string_view text) {
  const Json doc = ParseText(text, "substrate");
  Fields top(doc, "");
  top.CheckFormat();

  std::vector<Cloud> clouds;
  std::set<std::string> cloud_ids;
  const Json& jclouds = top.Array("clouds");
  for (std::size_t i = 0; i < jclouds.size(); ++i) {
    Fields f(jclouds[i], Indexed("clouds", i));
    Cloud c;
    c.id = f.String("id");
    const std::string kind = f.String("kind");
    if (kind == "private") {
      c.kind = CloudKind::kPrivate;
    } else if (kind == "public") {
      c.kind = CloudKind::kPublic;
    } else {
      throw InvalidInput(f.Where("kind") + ": expected \"private\" or \"public\"");
    }
    if (const Json* owner = f.Find("owner")) c.owner = Fields::AsString(*owner, f.Where("owner"));
    f.Done();
    cloud_ids.insert(c.id);
    clouds.push_back(std::move(c));
  }

  std::vector<SubstrateNode> nodes;
  std::set<std::string> node_ids;
  const Json& jnodes = top.Array("nodes");
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    Fields f(jnodes[i], Indexed("nodes", i));
    SubstrateNode n;
    n.id = f.String("id");
    n.cpu = f.Double("cpu");
    n.sec = SecurityLevel(f.Int("sec"));
    n.trust_req = SecurityLevel(f.Int("trust_req", 0));
    n.cloud = f.String("cloud");
    n.unit_cost = f.Double("unit_cost");
    f.Done();
    if (!cloud_ids.count(n.cloud)) {
      throw InvalidInput(f.Where("cloud") + ": node '" + n.id + "' references unknown cloud '" +
                         n.cloud + "'");
    }
    node_ids.insert(n.id);
    nodes.push_back(std::move(n));
  }

  std::vector<SubstrateLink> links;
  const Json& jlinks = top.Array("links");
  for (std::size_t i = 0; i < jlinks.size(); ++i) {
    Fields f(jlinks[i], Indexed("links", i));
    SubstrateLink l;
    if (const Json* id = f.Find("id")) l.id = Fields::AsString(*id, f.Where("id"));
    l.endpoints = f.Pair("endpoints");
    l.bw = f.Double("bw");
    l.sec = SecurityLevel(f.Int("sec"));
    l.unit_cost = f.Double("unit_cost");
    f.Done();
    for (const std::string& end : {l.endpoints.first, l.endpoints.second}) {
      if (!node_ids.count(end)) {
        throw InvalidInput(f.Where("endpoints") + ": unknown node '" + end + "'");
      }
    }
    links.push_back(std::move(l));
  }
  top.Done();

  return Construct<SubstrateNetwork>("substrate", [&] {
    return SubstrateNetwork(std::move(clouds), std::move(nodes), std::move(links));
  });
}

std::string write_substrate(const SubstrateNetwork& substrate) {
  Json doc;
  doc["format"] = kFormatVersion;
  Json clouds = Json::array();
  for (const Cloud& c : substrate.clouds()) {
    Json j;
    j["id"] = c.id;
    j["kind"] = c.kind == CloudKind::kPrivate ? "private" : "public";
    if (c.owner) j["owner"] = *c.owner;
    clouds.push_back(std::move(j));
  }
  doc["clouds"] = std::move(clouds);
  Json nodes = Json::array();
  for (const SubstrateNode& n : substrate.nodes()) {
    Json j;
    j["id"] = n.id;
    j["cpu"] = Number(n.cpu);
    j["sec"] = n.sec.value;
    j["trust_req"] = n.trust_req.value;
    j["cloud"] = n.cloud;
    j["unit_cost"] = Number(n.unit_cost);
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const SubstrateLink& l : substrate.links()) {
    Json j;
    j["id"] = l.id;
    j["endpoints"] = Json::array({l.endpoints.first, l.endpoints.second});
    j["bw"] = Number(l.bw);
    j["sec"] = l.sec.value;
    j["unit_cost"] = Number(l.unit_cost);
    links.push_back(std::move(j));
  }
  doc["links"] = std::move(links);
  return Dump(doc);
}

VnRequest parse_request(std::string_view text) {
  const Json doc = ParseText(text, "request");
  Fields top(doc, "");
  top.CheckFormat();
  const std::string id = top.String("id");
  const std::string tenant = top.String("tenant");

  std::vector<VirtualNode> nodes;
  const Json& jnodes = top.Array("nodes");
  for (std::size_t i = 0; i < jnodes.size(); ++i) {
    Fields f(jnodes[i], Indexed("nodes", i));
    VirtualNode n;
    n.id = f.String("id");
    n.cpu = f.Double("cpu");
    n.sec_dem = SecurityLevel(f.Int("sec_dem", 0));
    n.trust = SecurityLevel(f.Int("trust", 0));
    n.sensitive = f.Bool("sensitive", false);
    n.rep = f.Int("rep", 0);
    const Json& conflicts = f.Array("conflicts", false);
    for (std::size_t k = 0; k < conflicts.size(); ++k) {
      n.conflicts.insert(Fields::AsString(conflicts[k], Indexed(f.Where("conflicts"), k)));
    }
    const Json& avoid = f.Array("avoid_tenants", false);
    for (std::size_t k = 0; k < avoid.size(); ++k) {
      n.avoid_tenants.insert(Fields::AsString(avoid[k], Indexed(f.Where("avoid_tenants"), k)));
    }
    f.Done();
    nodes.push_back(std::move(n));
  }
  std::set<std::string> node_ids;
  for (const VirtualNode& n : nodes) node_ids.insert(n.id);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const std::string& other : nodes[i].conflicts) {
      if (!node_ids.count(other)) {
        throw InvalidInput(Indexed("nodes", i) + ".conflicts: unknown virtual node '" + other +
                           "'");
      }
    }
  }

  std::vector<VirtualLink> links;
  const Json& jlinks = top.Array("links", false);
  for (std::size_t i = 0; i < jlinks.size(); ++i) {
    Fields f(jlinks[i], Indexed("links", i));
    VirtualLink l;
    l.endpoints = f.Pair("endpoints");
    l.bw = f.Double("bw");
    l.sec_dem = SecurityLevel(f.Int("sec_dem", 0));
    l.rep = f.Int("rep", 0);
    f.Done();
    for (const std::string& end : {l.endpoints.first, l.endpoints.second}) {
      if (!node_ids.count(end)) {
        throw InvalidInput(f.Where("endpoints") + ": unknown virtual node '" + end + "'");
      }
    }
    links.push_back(std::move(l));
  }
  const std::optional<double> arrival = top.OptDouble("arrival");
  const std::optional<double> lifetime = top.OptDouble("lifetime");
  top.Done();

  return Construct<VnRequest>("request", [&] {
    return VnRequest(id, tenant, std::move(nodes), std::move(links), arrival, lifetime);
  });
}

std::string write_request(const VnRequest& request) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["id"] = request.id();
  doc["tenant"] = request.tenant();
  Json nodes = Json::array();
  for (const VirtualNode& n : request.nodes()) {
    Json j;
    j["id"] = n.id;
    j["cpu"] = Number(n.cpu);
    j["sec_dem"] = n.sec_dem.value;
    j["trust"] = n.trust.value;
    j["sensitive"] = n.sensitive;
    j["rep"] = n.rep;
    j["conflicts"] = Json::array();
    for (const std::string& c : n.conflicts) j["conflicts"].push_back(c);
    j["avoid_tenants"] = Json::array();
    for (const std::string& t : n.avoid_tenants) j["avoid_tenants"].push_back(t);
    nodes.push_back(std::move(j));
  }
  doc["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const VirtualLink& l : request.links()) {
    Json j;
    j["endpoints"] = Json::array({l.endpoints.first, l.endpoints.second});
    j["bw"] = Number(l.bw);
    j["sec_dem"] = l.sec_dem.value;
    j["rep"] = l.rep;
    links.push_back(std::move(j));
  }
  doc["links"] = std::move(links);
  if (request.arrival()) doc["arrival"] = Number(*request.arrival());
  if (request.lifetime()) doc["lifetime"] = Number(*request.lifetime());
  return Dump(doc);
}

std::string write_outcome(const SubstrateNetwork& substrate, const VnRequest& request,
                          const Outcome& outcome) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["request"] = request.id();
  doc["status"] = std::string(to_string(outcome.kind));
  if (!outcome.embedded()) {
    doc["reason"] = outcome.reason;
    return Dump(doc);
  }
  const Embedding& emb = outcome.embedding;
  doc["cost"] = Number(emb.cost);
  doc["revenue"] = Number(emb.revenue);
  Json node_map = Json::array();
  for (std::size_t i = 0; i < emb.node_map.size(); ++i) {
    for (std::size_t k = 0; k < emb.node_map[i].size(); ++k) {
      Json j;
      j["vnode"] = request.node(static_cast<int>(i)).id;
      j["copy"] = static_cast<int>(k);
      j["host"] = substrate.node(emb.node_map[i][k]).id;
      node_map.push_back(std::move(j));
    }
  }
  doc["node_map"] = std::move(node_map);
  Json link_map = Json::array();
  for (std::size_t l = 0; l < emb.link_map.size(); ++l) {
    const auto& [a, b] = request.link(static_cast<int>(l)).endpoints;
    for (std::size_t p = 0; p < emb.link_map[l].size(); ++p) {
      Json j;
      j["vlink"] = Json::array({a, b});
      j["path"] = static_cast<int>(p);
      j["links"] = PathIds(substrate, emb.link_map[l][p]);
      link_map.push_back(std::move(j));
    }
  }
  doc["link_map"] = std::move(link_map);
  return Dump(doc);
}

Outcome parse_outcome(std::string_view text, const SubstrateNetwork& substrate,
                      const VnRequest& request) {
  const Json doc = ParseText(text, "outcome");
  Fields top(doc, "");
  top.CheckFormat();
  const std::string id = top.String("request");
  if (id != request.id()) {
    throw InvalidInput(top.Where("request") + ": outcome is for '" + id + "', not '" +
                       request.id() + "'");
  }
  const std::string status = top.String("status");
  if (status == "rejected" || status == "budget_exceeded") {
    std::string reason = top.String("reason");
    top.Done();
    return status == "rejected" ? Outcome::Rejected(std::move(reason))
                                : Outcome::BudgetExceeded(std::move(reason));
  }
  if (status != "embedded") {
    throw InvalidInput(top.Where("status") + ": expected embedded, rejected or budget_exceeded");
  }

  Embedding emb;
  emb.cost = top.Double("cost");
  emb.revenue = top.Double("revenue");
  for (const VirtualNode& n : request.nodes()) emb.node_map.emplace_back(1 + n.rep, -1);
  for (const VirtualLink& l : request.links()) emb.link_map.emplace_back(1 + l.rep);
  std::vector<std::vector<bool>> path_seen;
  for (const VirtualLink& l : request.links()) path_seen.emplace_back(1 + l.rep, false);

  const Json& node_map = top.Array("node_map");
  for (std::size_t i = 0; i < node_map.size(); ++i) {
    Fields f(node_map[i], Indexed("node_map", i));
    const std::string vnode = f.String("vnode");
    const int copy = f.Int("copy");
    const std::string host = f.String("host");
    f.Done();
    const auto v = request.find_node(vnode);
    if (!v) throw InvalidInput(f.Where("vnode") + ": unknown virtual node '" + vnode + "'");
    if (copy < 0 || copy >= static_cast<int>(emb.node_map[*v].size())) {
      throw InvalidInput(f.Where("copy") + ": no copy " + std::to_string(copy) + " of '" +
                         vnode + "'");
    }
    const auto u = substrate.find_node(host);
    if (!u) throw InvalidInput(f.Where("host") + ": unknown substrate node '" + host + "'");
    if (emb.node_map[*v][copy] != -1) {
      throw InvalidInput(f.Where() + ": copy " + std::to_string(copy) + " of '" + vnode +
                         "' mapped twice");
    }
    emb.node_map[*v][copy] = *u;
  }

  const Json& link_map = top.Array("link_map");
  for (std::size_t i = 0; i < link_map.size(); ++i) {
    Fields f(link_map[i], Indexed("link_map", i));
    const auto [a, b] = f.Pair("vlink");
    const int path = f.Int("path");
    const Json& ids = f.Array("links");
    f.Done();
    const auto l = request.find_link(a, b);
    if (!l) throw InvalidInput(f.Where("vlink") + ": unknown virtual link " + a + "-" + b);
    if (request.link(*l).endpoints != std::pair(a, b)) {
      throw InvalidInput(f.Where("vlink") + ": endpoints must be listed as declared");
    }
    if (path < 0 || path >= static_cast<int>(path_seen[*l].size())) {
      throw InvalidInput(f.Where("path") + ": no path " + std::to_string(path) + " of " + a +
                         "-" + b);
    }
    if (path_seen[*l][path]) {
      throw InvalidInput(f.Where() + ": path " + std::to_string(path) + " of " + a + "-" + b +
                         " mapped twice");
    }
    path_seen[*l][path] = true;
    Path links;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      const std::string where = Indexed(f.Where("links"), k);
      const std::string link_id = Fields::AsString(ids[k], where);
      const auto e = substrate.find_link(link_id);
      if (!e) throw InvalidInput(where + ": unknown substrate link '" + link_id + "'");
      links.push_back(*e);
    }
    emb.link_map[*l][path] = std::move(links);
  }
  top.Done();

  for (int v = 0; v < request.num_nodes(); ++v) {
    for (std::size_t k = 0; k < emb.node_map[v].size(); ++k) {
      if (emb.node_map[v][k] == -1) {
        throw InvalidInput("node_map: copy " + std::to_string(k) + " of '" + request.node(v).id +
                           "' is not mapped");
      }
    }
  }
  for (int l = 0; l < request.num_links(); ++l) {
    for (std::size_t p = 0; p < path_seen[l].size(); ++p) {
      if (!path_seen[l][p]) {
        const auto& [a, b] = request.link(l).endpoints;
        throw InvalidInput("link_map: path " + std::to_string(p) + " of " + a + "-" + b +
                           " is not mapped");
      }
    }
  }
  return Outcome::Embedded(std::move(emb));
}

std::string write_violations(const std::vector<Violation>& violations) {
  Json doc;
  doc["format"] = kFormatVersion;
  doc["valid"] = violations.empty();
  Json list = Json::array();
  for (const Violation& v : violations) {
    Json j;
    j["code"] = std::string(to_string(v.code));
    j["detail"] = v.detail;
    list.push_back(std::move(j));
  }
  doc["violations"] = std::move(list);
  return Dump(doc);
}

std::string write_metrics_csv(const Metrics& metrics) {
  std::ostringstream out;
  out << "time,event,request,status,cost,revenue,node_utilization,link_utilization\n";
  for (const TraceRow& row : metrics.trace) {
    out << format_number(row.time) << ',' << to_string(row.event) << ',' << row.request_id << ','
        << to_string(row.status) << ',';
    if (row.status == TraceStatus::kAccepted) {
      out << format_number(row.cost) << ',' << format_number(row.revenue);
    } else {
      out << ',';
    }
    out << ',' << format_number(row.node_utilization) << ','
        << format_number(row.link_utilization) << '\n';
  }
  out << "# summary\n";
  out << "arrived," << metrics.arrived << '\n';
  out << "accepted," << metrics.accepted << '\n';
  out << "rejected," << metrics.rejected << '\n';
  out << "budget_exceeded," << metrics.budget_exceeded << '\n';
  out << "acceptance_ratio," << format_number(metrics.acceptance_ratio) << '\n';
  out << "total_revenue," << format_number(metrics.total_revenue) << '\n';
  out << "total_cost," << format_number(metrics.total_cost) << '\n';
  out << "revenue_cost_ratio," << format_number(metrics.revenue_cost_ratio) << '\n';
  out << "avg_node_utilization," << format_number(metrics.avg_node_utilization) << '\n';
  out << "avg_link_utilization," << format_number(metrics.avg_link_utilization) << '\n';
  return out.str();
}

}  // namespace secvne
