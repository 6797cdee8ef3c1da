#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bghc/basis.hpp"

namespace bghc {

// Loop-free multigraph. Parallel edges are distinct and carry stable ids;
// minors keep surviving ids so ground sets embed into the parent's.
struct MEdge {
  int id = -1;
  int u = -1;
  int v = -1;
};

struct Multigraph {
  int n = 0;                 // vertices 0..n-1
  std::vector<MEdge> edges;  // sorted by id

  int m() const { return static_cast<int>(edges.size()); }
  const MEdge* find_edge(int id) const;
  int max_id() const;
  std::vector<int> degrees() const;

  static Multigraph make(int n, std::vector<MEdge> edges);  // validates, sorts by id
};

// Named generators (ids 0..m-1 in construction order).
Multigraph mg_cycle(int n);                       // n >= 2; C_2 = parallel pair
Multigraph mg_complete(int n);                    // K_n
Multigraph mg_k2_sum_cycle(int n);                // C_2 (+)_1 C_{n-1}, n >= 3
Multigraph mg_theta(int a, int b, int c);         // three internally disjoint u-v paths
Multigraph mg_prism(int n);                       // circular ladder C_n x K_2, n >= 3

bool is_connected(const Multigraph& g);

// Global min edge cut via unit-capacity max-flow over multiplicities.
// Returns 0 for disconnected graphs; requires n >= 2.
int edge_connectivity(const Multigraph& g);

Multigraph delete_edge(const Multigraph& g, int edge_id);
// Merges endpoints, drops resulting loops, keeps surviving ids.
Multigraph contract_edge(const Multigraph& g, int edge_id);

// Matrix-tree determinant (exact, fraction-free).
uint64_t kirchhoff_count(const Multigraph& g);

// All spanning trees as sorted edge-id sets; rank n-1. The family's
// ground_size is max_id+1, so ids absent from g (minor gaps) are loops.
BasisFamily enumerate_spanning_trees(const Multigraph& g);

struct FundamentalCycle {
  Element chord = -1;
  std::vector<Element> cycle_edges;  // sorted, includes chord
};

// Unique cycle of tree + chord. Throws ChordInTree.
FundamentalCycle fundamental_cycle(const Multigraph& g, const Basis& tree, Element chord);

struct XyzPartition {
  std::vector<int> x, y, z;  // disjoint vertex sets covering V(G)
};

// X: component of B1-e avoiding f; Z: component of B1-f avoiding e; Y: rest.
// Throws NotTreeEdge when e or f is not a tree edge (or e == f).
XyzPartition xyz_partition(const Multigraph& g, const Basis& b1, Element e, Element f);

enum class ExceptionalKind { CycleN, TwoSumC2Cn1, Neither };

// Classification against the two families whose basis graphs need the
// closed-form constructions (C_n and C_2 (+)_1 C_{n-1}).
ExceptionalKind recognize_exceptional(const Multigraph& g);

// For a TwoSumC2Cn1 graph: the parallel pair and the outer cycle's edge ids.
struct TwoSumShape {
  std::array<Element, 2> pair_edges;     // the C_2
  std::vector<Element> cycle_edges;      // the C_{n-1}, sorted by id
};
TwoSumShape two_sum_shape(const Multigraph& g);

// Canonical encoding under vertex relabeling (n <= 8), for isomorphism dedup.
std::string canonical_key(const Multigraph& g);

// All connected multigraphs with n_min <= n <= n_max vertices and at most
// m_max edges, modulo isomorphism, with edge connectivity >= min_conn.
// Deterministic order; exhaustive at desk scale.
std::vector<Multigraph> enumerate_multigraph_pool(int n_min, int n_max, int m_max, int min_conn);

}  // namespace bghc
