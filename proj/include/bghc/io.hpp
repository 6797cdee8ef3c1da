#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bghc/basis.hpp"
#include "bghc/hamilton.hpp"
#include "bghc/multigraph.hpp"

namespace bghc {

// BasisFamily JSON: {"ground_size": int, "rank": int, "bases": [[int,...],...]}
nlohmann::json family_to_json(const BasisFamily& family);
BasisFamily family_from_json(const nlohmann::json& j);

// Multigraph JSON: {"n": int, "edges": [[id,u,v],...]}
nlohmann::json multigraph_to_json(const Multigraph& g);
Multigraph multigraph_from_json(const nlohmann::json& j);

nlohmann::json basis_graph_to_json(const BasisGraph& bg);

nlohmann::json good_cycle_to_json(const GoodCycle& gc);

// Witness sets as JSON lists of undirected edge lists.
nlohmann::json witness_set_to_json(const WitnessSet& ws);
WitnessSet witness_set_from_json(const nlohmann::json& j);

// Deterministic DOT with vertex labels = basis element lists; `highlights`
// edges are drawn bold red (e.g. a good cycle).
std::string export_dot(const BasisFamily& family, const BasisGraph& bg,
                       const std::vector<std::pair<int, int>>& highlights = {});

}  // namespace bghc
