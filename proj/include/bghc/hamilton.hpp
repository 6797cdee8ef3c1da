#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bghc/basis.hpp"

namespace bghc {

struct HcCount {
  uint64_t value = 0;
  bool capped = false;  // true when counting stopped at the threshold
};

// Number of Hamiltonian cycles (as edge sets) through edge uv, by
// backtracking rooted at the edge with the traversal direction fixed so
// reversals are not double-counted. Stops early once `cap` is reached.
// Throws TooSmall below 3 vertices and NotAnEdge when uv is absent.
HcCount count_hc_through_edge(const BasisGraph& bg, int u, int v,
                              std::optional<uint64_t> cap = std::nullopt);

// Exact count via subset DP; independent of the backtracking route.
// Feasible up to ~20 vertices.
uint64_t count_hc_through_edge_dp(const BasisGraph& bg, int u, int v);

// Capped counting with a search-node budget; nullopt when the budget ran
// out before either reaching `cap` or exhausting the space. Callers fall
// back to a constructive certificate (witness cycles) in that case.
std::optional<HcCount> count_hc_budgeted(const BasisGraph& bg, int u, int v, uint64_t cap,
                                         uint64_t node_budget);

// First `max_count` Hamiltonian cycles through uv in deterministic
// (ascending-neighbor) order; all of them when fewer exist.
std::vector<CycleEdges> enumerate_hc_through_edge(const BasisGraph& bg, int u, int v,
                                                  uint64_t max_count);

// Budgeted variant; nullopt when the node budget ran out before finding
// `max_count` cycles or exhausting the space.
std::optional<std::vector<CycleEdges>> enumerate_hc_budgeted(const BasisGraph& bg, int u, int v,
                                                             uint64_t max_count,
                                                             uint64_t node_budget);

// min over edges of count_hc_through_edge; capped semantics propagate.
// When `representatives` is given (an orbit certificate checked by the
// caller), only those edges are counted.
HcCount hc_star(const BasisGraph& bg, std::optional<uint64_t> cap = std::nullopt,
                const std::vector<std::pair<int, int>>* representatives = nullptr);

struct WitnessSet {
  std::pair<int, int> edge{-1, -1};
  std::vector<CycleEdges> cycles;  // pairwise distinct, each through `edge`
  uint64_t collisions = 0;         // glued duplicates discarded during generation

  size_t size() const { return cycles.size(); }
};

// BG = K_n: the (n-2)! permutation cycles through the edge (all of them
// up to `cap`). Requires a complete graph.
WitnessSet witnesses_complete(const BasisGraph& bg, int u, int v, uint64_t cap = UINT64_MAX);

// BG = K_2 x K_t (Cartesian product): coords[v] = (copy in {0,1}, column).
// Emits the (t-1)!(t-2)! construction through the edge, handling both edge
// orbits, up to `cap`.
WitnessSet witnesses_prism(const BasisGraph& bg, const std::vector<std::pair<int, int>>& coords,
                           int u, int v, uint64_t cap = UINT64_MAX);

void validate_witness_set(const BasisGraph& bg, const WitnessSet& ws);

}  // namespace bghc
