#include "bghc/io.hpp"

#include <algorithm>
#include <sstream>

namespace bghc {

using nlohmann::json;

json family_to_json(const BasisFamily& family) {
  json j;
  j["ground_size"] = family.ground_size;
  j["rank"] = family.rank;
  j["bases"] = family.bases;
  return j;
}

BasisFamily family_from_json(const json& j) {
  std::vector<Basis> bases;
  for (const auto& b : j.at("bases")) bases.push_back(b.get<Basis>());
  BasisFamily fam = BasisFamily::make(j.at("ground_size").get<int>(), std::move(bases));
  if (fam.rank != j.at("rank").get<int>())
    throw Error("RankMismatch", "declared rank disagrees with bases");
  return fam;
}

json multigraph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const MEdge& e : g.edges) edges.push_back({e.id, e.u, e.v});
  return json{{"n", g.n}, {"edges", edges}};
}

Multigraph multigraph_from_json(const json& j) {
  std::vector<MEdge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  return Multigraph::make(j.at("n").get<int>(), std::move(edges));
}

json basis_graph_to_json(const BasisGraph& bg) {
  return json{{"num_vertices", bg.num_vertices}, {"adjacency", bg.adj}};
}

json good_cycle_to_json(const GoodCycle& gc) {
  return json{{"vertices", {gc.b1, gc.b2, gc.b3, gc.b4}},
              {"e", gc.e},
              {"g", gc.g},
              {"f", gc.f},
              {"w", gc.w}};
}

json witness_set_to_json(const WitnessSet& ws) {
  json cycles = json::array();
  for (const CycleEdges& c : ws.cycles) {
    json edges = json::array();
    for (const auto& [u, v] : c) edges.push_back({u, v});
    cycles.push_back(edges);
  }
  return json{{"edge", {ws.edge.first, ws.edge.second}},
              {"cycles", cycles},
              {"collisions", ws.collisions}};
}

WitnessSet witness_set_from_json(const json& j) {
  WitnessSet ws;
  ws.edge = {j.at("edge").at(0).get<int>(), j.at("edge").at(1).get<int>()};
  for (const auto& cyc : j.at("cycles")) {
    CycleEdges c;
    for (const auto& e : cyc) {
      int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      c.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(c.begin(), c.end());
    ws.cycles.push_back(std::move(c));
  }
  ws.collisions = j.value("collisions", 0ull);
  return ws;
}

std::string export_dot(const BasisFamily& family, const BasisGraph& bg,
                       const std::vector<std::pair<int, int>>& highlights) {
  std::vector<std::pair<int, int>> hl = highlights;
  for (auto& [u, v] : hl)
    if (u > v) std::swap(u, v);
  std::sort(hl.begin(), hl.end());
  std::ostringstream out;
  out << "graph BG {\n";
  for (int v = 0; v < bg.num_vertices; ++v) {
    out << "  v" << v << " [label=\"{";
    const Basis& b = family.bases[v];
    for (size_t i = 0; i < b.size(); ++i) out << (i ? "," : "") << b[i];
    out << "}\"];\n";
  }
  for (const auto& [u, v] : bg.edges()) {
    out << "  v" << u << " -- v" << v;
    if (std::binary_search(hl.begin(), hl.end(), std::make_pair(u, v)))
      out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bghc
