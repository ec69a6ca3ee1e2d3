#include "gcx/json_io.hpp"

#include <stdexcept>

namespace gcx::json_io {

Json graph_to_json(const graph::ModularGraph& g) {
  Json out;
  out["vertices"] = Json::array();
  for (int v = 0; v < g.g.vertex_count; ++v)
    out["vertices"].push_back(Json{{"id", v}, {"genus", g.genus[v]}});
  out["flags"] = Json::array();
  for (int f = 0; f < g.g.flag_count(); ++f)
    out["flags"].push_back(Json{{"id", f}, {"vertex", g.g.adjacency[f]}});
  out["edges"] = Json::array();
  for (auto [a, b] : g.g.edges()) out["edges"].push_back(Json::array({a, b}));
  Json legs = Json::object();
  for (int i = 0; i < g.n_legs(); ++i) legs[std::to_string(i + 1)] = g.leg_labels[i];
  out["legs"] = legs;
  return out;
}

graph::ModularGraph graph_from_json(const Json& j) {
  graph::ModularGraph g;
  g.g.vertex_count = (int)j.at("vertices").size();
  g.genus.assign(g.g.vertex_count, 0);
  for (const auto& v : j.at("vertices")) g.genus.at(v.at("id").get<int>()) = v.at("genus").get<int>();
  int F = (int)j.at("flags").size();
  g.g.adjacency.assign(F, -1);
  g.g.involution.resize(F);
  for (int f = 0; f < F; ++f) g.g.involution[f] = f;
  for (const auto& fl : j.at("flags"))
    g.g.adjacency.at(fl.at("id").get<int>()) = fl.at("vertex").get<int>();
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    g.g.involution.at(a) = b;
    g.g.involution.at(b) = a;
  }
  int n = (int)j.at("legs").size();
  g.leg_labels.resize(n);
  for (int i = 0; i < n; ++i) g.leg_labels[i] = j.at("legs").at(std::to_string(i + 1)).get<int>();
  g.validate();
  return g;
}

Json chain_to_json(feynman::Complex& cx, const feynman::Chain& c) {
  Json out;
  out["g"] = cx.genus();
  out["n"] = cx.legs();
  out["terms"] = Json::array();
  for (const auto& [key, coeff] : c) {
    auto [gid, s, k] = key;
    const auto& graph = cx.graph_of(gid);
    Json term;
    term["graph"] = graph_to_json(graph);
    Json orient = Json::array();
    for (auto [a, b] : graph.g.edges()) orient.push_back(Json::array({a, b}));
    term["orientation"] = orient;
    term["internal_degree"] = s;
    term["basis_index"] = k;
    term["coeff"] = coeff.str();
    out["terms"].push_back(term);
  }
  return out;
}

}  // namespace gcx::json_io
