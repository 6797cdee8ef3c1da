#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bghc {

// Library-wide error with a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Ground-set elements are 0-based contiguous ints {0..ground_size-1}.
// (Classical treatments number elements from 1; all I/O here is 0-based.)
using Element = int;

// A basis is a strictly increasing list of elements.
using Basis = std::vector<Element>;

Basis basis_minus_plus(const Basis& b, Element remove, Element add);
bool basis_contains(const Basis& b, Element e);

// All bases of one matroid, stored lexicographically sorted so vertex
// indices are reproducible across runs. Elements that appear in no basis
// are loops; ids are kept stable across split_by_element.
struct BasisFamily {
  int ground_size = 0;
  int rank = 0;
  std::vector<Basis> bases;

  int size() const { return static_cast<int>(bases.size()); }
  int index_of(const Basis& b) const;  // -1 if absent

  // Sorts bases, validates cardinalities/ranges, rejects duplicates.
  static BasisFamily make(int ground_size, std::vector<Basis> bases);

  bool is_loop(Element e) const;     // in no basis
  bool is_isthmus(Element e) const;  // in every basis
};

struct AxiomViolation {
  int b1 = -1, b2 = -1;
  Element e = -1;
};

struct AxiomResult {
  bool ok = true;
  std::optional<AxiomViolation> violation;
};

// Basis exchange axiom over all ordered pairs; reports the first violation.
AxiomResult check_basis_axiom(const BasisFamily& family);

struct BasisGraph {
  int num_vertices = 0;
  std::vector<std::vector<int>> adj;  // sorted neighbor lists

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  size_t num_edges() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, sorted
  bool is_complete() const;
};

// Adjacency: |B1 Δ B2| == 2.
BasisGraph build_basis_graph(const BasisFamily& family);

struct SplitSides {
  BasisFamily contract_side;  // {B - e : e in B}, rank r-1, ids unchanged
  BasisFamily delete_side;    // {B : e not in B}
  std::vector<int> to_contract;  // parent vertex -> contract vertex or -1
  std::vector<int> to_delete;    // parent vertex -> delete vertex or -1
};

// Throws LoopOrIsthmus when e is in no basis or in every basis.
SplitSides split_by_element(const BasisFamily& family, Element e);

// A 4-cycle b1 b2 b3 b4 with e in B1,B4 and e not in B2,B3, annotated with
// the exchange elements: B2 = B1 - e + g, B4 = B1 - f + w.
struct GoodCycle {
  int b1 = -1, b2 = -1, b3 = -1, b4 = -1;
  Element e = -1, g = -1, f = -1, w = -1;

  friend bool operator==(const GoodCycle& a, const GoodCycle& b) {
    return a.b1 == b.b1 && a.b2 == b.b2 && a.b3 == b.b3 && a.b4 == b.b4;
  }
  friend bool operator<(const GoodCycle& a, const GoodCycle& b) {
    if (a.b1 != b.b1) return a.b1 < b.b1;
    if (a.b2 != b.b2) return a.b2 < b.b2;
    if (a.b3 != b.b3) return a.b3 < b.b3;
    return a.b4 < b.b4;
  }
};

// Builds the annotated cycle from its vertices and checks every invariant
// (adjacency pattern, e-membership, distinctness). Throws on violation.
GoodCycle make_good_cycle(const BasisFamily& family, const BasisGraph& bg,
                          int b1, int b2, int b3, int b4);

void validate_good_cycle(const BasisFamily& family, const BasisGraph& bg, const GoodCycle& gc);

// Definition-level enumeration of the good cycles for the ordered edge
// (b1,b2); the oracle every family-specific constructor is checked against.
// Identity: distinguished pair (b1,b2) + vertex set; b3/b4 forced by e.
std::vector<GoodCycle> good_cycles_bruteforce(const BasisFamily& family, const BasisGraph& bg,
                                              int b1, int b2);

// Cycles in basis graphs are undirected, unrooted edge sets.
using CycleEdges = std::vector<std::pair<int, int>>;  // pairs u<v, sorted

CycleEdges cycle_from_vertex_seq(const std::vector<int>& seq);
CycleEdges good_cycle_edges(const GoodCycle& gc);
bool cycle_contains_edge(const CycleEdges& c, int u, int v);
bool is_hamiltonian_cycle(const BasisGraph& bg, const CycleEdges& c);

// Edge-set symmetric difference of hc_x (through b1b4), the good cycle, and
// hc_y (through b2b3; absent when the delete side is a single BG edge).
// Validates the result is a Hamiltonian cycle of bg containing b1b2.
CycleEdges glue_hamiltonian(const BasisGraph& bg, const CycleEdges& hc_x, const GoodCycle& gc,
                            const std::optional<CycleEdges>& hc_y);

}  // namespace bghc
