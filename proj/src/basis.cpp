#include "bghc/basis.hpp"

#include <algorithm>
#include <set>

namespace bghc {

bool basis_contains(const Basis& b, Element e) {
  return std::binary_search(b.begin(), b.end(), e);
}

Basis basis_minus_plus(const Basis& b, Element remove, Element add) {
  Basis out;
  out.reserve(b.size());
  for (Element x : b)
    if (x != remove) out.push_back(x);
  auto pos = std::lower_bound(out.begin(), out.end(), add);
  out.insert(pos, add);
  return out;
}

int BasisFamily::index_of(const Basis& b) const {
  auto it = std::lower_bound(bases.begin(), bases.end(), b);
  if (it != bases.end() && *it == b) return static_cast<int>(it - bases.begin());
  return -1;
}

BasisFamily BasisFamily::make(int ground_size, std::vector<Basis> bases) {
  if (bases.empty()) throw Error("EmptyFamily", "a matroid has at least one basis");
  std::sort(bases.begin(), bases.end());
  BasisFamily fam;
  fam.ground_size = ground_size;
  fam.rank = static_cast<int>(bases.front().size());
  for (size_t i = 0; i < bases.size(); ++i) {
    const Basis& b = bases[i];
    if (static_cast<int>(b.size()) != fam.rank)
      throw Error("RankMismatch", "bases of unequal cardinality");
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] < 0 || b[j] >= ground_size)
        throw Error("ElementOutOfRange", "element id outside ground set");
      if (j > 0 && b[j] <= b[j - 1]) throw Error("NotSorted", "basis not strictly increasing");
    }
    if (i > 0 && bases[i] == bases[i - 1]) throw Error("DuplicateBasis", "duplicate basis");
  }
  fam.bases = std::move(bases);
  return fam;
}

bool BasisFamily::is_loop(Element e) const {
  for (const Basis& b : bases)
    if (basis_contains(b, e)) return false;
  return true;
}

bool BasisFamily::is_isthmus(Element e) const {
  for (const Basis& b : bases)
    if (!basis_contains(b, e)) return false;
  return true;
}

AxiomResult check_basis_axiom(const BasisFamily& family) {
  const auto& bases = family.bases;
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = 0; j < bases.size(); ++j) {
      if (i == j) continue;
      const Basis& b1 = bases[i];
      const Basis& b2 = bases[j];
      for (Element e : b1) {
        if (basis_contains(b2, e)) continue;
        bool found = false;
        for (Element g : b2) {
          if (basis_contains(b1, g)) continue;
          if (family.index_of(basis_minus_plus(b1, e, g)) >= 0) {
            found = true;
            break;
          }
        }
        if (!found) {
          return {false, AxiomViolation{static_cast<int>(i), static_cast<int>(j), e}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool BasisGraph::has_edge(int u, int v) const {
  const auto& a = adj[u];
  return std::binary_search(a.begin(), a.end(), v);
}

size_t BasisGraph::num_edges() const {
  size_t total = 0;
  for (const auto& a : adj) total += a.size();
  return total / 2;
}

std::vector<std::pair<int, int>> BasisGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_vertices; ++u)
    for (int v : adj[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool BasisGraph::is_complete() const {
  for (int u = 0; u < num_vertices; ++u)
    if (degree(u) != num_vertices - 1) return false;
  return true;
}

BasisGraph build_basis_graph(const BasisFamily& family) {
  BasisGraph bg;
  bg.num_vertices = family.size();
  bg.adj.assign(bg.num_vertices, {});
  for (int i = 0; i < family.size(); ++i) {
    for (int j = i + 1; j < family.size(); ++j) {
      const Basis& a = family.bases[i];
      const Basis& b = family.bases[j];
      // |a Δ b| == 2 iff exactly one element of each is missing from the other.
      size_t ia = 0, ib = 0, diff = 0;
      while (ia < a.size() && ib < b.size() && diff <= 2) {
        if (a[ia] == b[ib]) {
          ++ia, ++ib;
        } else if (a[ia] < b[ib]) {
          ++ia, ++diff;
        } else {
          ++ib, ++diff;
        }
      }
      diff += (a.size() - ia) + (b.size() - ib);
      if (diff == 2) {
        bg.adj[i].push_back(j);
        bg.adj[j].push_back(i);
      }
    }
  }
  for (auto& a : bg.adj) std::sort(a.begin(), a.end());
  return bg;
}

SplitSides split_by_element(const BasisFamily& family, Element e) {
  if (e < 0 || e >= family.ground_size)
    throw Error("ElementOutOfRange", "split element outside ground set");
  if (family.is_loop(e) || family.is_isthmus(e))
    throw Error("LoopOrIsthmus", "cannot split on element " + std::to_string(e));
  std::vector<Basis> with, without;
  for (const Basis& b : family.bases) {
    if (basis_contains(b, e)) {
      Basis reduced;
      reduced.reserve(b.size() - 1);
      for (Element x : b)
        if (x != e) reduced.push_back(x);
      with.push_back(std::move(reduced));
    } else {
      without.push_back(b);
    }
  }
  SplitSides out;
  out.contract_side = BasisFamily::make(family.ground_size, std::move(with));
  out.delete_side = BasisFamily::make(family.ground_size, std::move(without));
  out.to_contract.assign(family.size(), -1);
  out.to_delete.assign(family.size(), -1);
  for (int i = 0; i < family.size(); ++i) {
    const Basis& b = family.bases[i];
    if (basis_contains(b, e)) {
      Basis reduced;
      for (Element x : b)
        if (x != e) reduced.push_back(x);
      out.to_contract[i] = out.contract_side.index_of(reduced);
    } else {
      out.to_delete[i] = out.delete_side.index_of(b);
    }
  }
  return out;
}

namespace {

// The single exchanged pair of an adjacent basis pair.
void exchanged_pair(const Basis& b1, const Basis& b2, Element& removed, Element& added) {
  removed = -1;
  added = -1;
  for (Element x : b1)
    if (!basis_contains(b2, x)) removed = x;
  for (Element x : b2)
    if (!basis_contains(b1, x)) added = x;
  if (removed < 0 || added < 0)
    throw Error("NotAnEdge", "bases do not differ by a single exchange");
}

}  // namespace

GoodCycle make_good_cycle(const BasisFamily& family, const BasisGraph& bg,
                          int b1, int b2, int b3, int b4) {
  GoodCycle gc;
  gc.b1 = b1;
  gc.b2 = b2;
  gc.b3 = b3;
  gc.b4 = b4;
  Element e, g, f, w;
  exchanged_pair(family.bases[b1], family.bases[b2], e, g);
  gc.e = e;
  gc.g = g;
  exchanged_pair(family.bases[b1], family.bases[b4], f, w);
  gc.f = f;
  gc.w = w;
  validate_good_cycle(family, bg, gc);
  return gc;
}

void validate_good_cycle(const BasisFamily& family, const BasisGraph& bg, const GoodCycle& gc) {
  int vs[4] = {gc.b1, gc.b2, gc.b3, gc.b4};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw Error("BadGoodCycle", "vertices not pairwise distinct");
  if (!bg.has_edge(gc.b1, gc.b2) || !bg.has_edge(gc.b2, gc.b3) || !bg.has_edge(gc.b3, gc.b4) ||
      !bg.has_edge(gc.b4, gc.b1))
    throw Error("BadGoodCycle", "not a 4-cycle in the basis graph");
  const Basis& B1 = family.bases[gc.b1];
  const Basis& B2 = family.bases[gc.b2];
  const Basis& B3 = family.bases[gc.b3];
  const Basis& B4 = family.bases[gc.b4];
  if (!basis_contains(B1, gc.e) || !basis_contains(B4, gc.e) || basis_contains(B2, gc.e) ||
      basis_contains(B3, gc.e))
    throw Error("BadGoodCycle", "e-membership pattern violated");
}

std::vector<GoodCycle> good_cycles_bruteforce(const BasisFamily& family, const BasisGraph& bg,
                                              int b1, int b2) {
  if (!bg.has_edge(b1, b2)) throw Error("NotAnEdge", "b1b2 is not an edge of the basis graph");
  Element e, g;
  exchanged_pair(family.bases[b1], family.bases[b2], e, g);
  std::vector<GoodCycle> out;
  for (int b4 : bg.adj[b1]) {
    if (b4 == b2) continue;
    if (!basis_contains(family.bases[b4], e)) continue;
    for (int b3 : bg.adj[b2]) {
      if (b3 == b1 || b3 == b4) continue;
      if (basis_contains(family.bases[b3], e)) continue;
      if (!bg.has_edge(b3, b4)) continue;
      out.push_back(make_good_cycle(family, bg, b1, b2, b3, b4));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleEdges cycle_from_vertex_seq(const std::vector<int>& seq) {
  CycleEdges out;
  out.reserve(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    int u = seq[i];
    int v = seq[(i + 1) % seq.size()];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleEdges good_cycle_edges(const GoodCycle& gc) {
  return cycle_from_vertex_seq({gc.b1, gc.b2, gc.b3, gc.b4});
}

bool cycle_contains_edge(const CycleEdges& c, int u, int v) {
  std::pair<int, int> key{std::min(u, v), std::max(u, v)};
  return std::binary_search(c.begin(), c.end(), key);
}

bool is_hamiltonian_cycle(const BasisGraph& bg, const CycleEdges& c) {
  if (static_cast<int>(c.size()) != bg.num_vertices || bg.num_vertices < 3) return false;
  std::vector<std::vector<int>> nbr(bg.num_vertices);
  for (const auto& [u, v] : c) {
    if (u < 0 || v >= bg.num_vertices || !bg.has_edge(u, v)) return false;
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  for (int v = 0; v < bg.num_vertices; ++v)
    if (nbr[v].size() != 2) return false;
  // Degree 2 everywhere with |E| = n: Hamiltonian iff a single cycle.
  std::vector<bool> seen(bg.num_vertices, false);
  int cur = 0, prev = -1, visited = 0;
  do {
    seen[cur] = true;
    ++visited;
    int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = next;
  } while (cur != 0 && !seen[cur]);
  return cur == 0 && visited == bg.num_vertices;
}

CycleEdges glue_hamiltonian(const BasisGraph& bg, const CycleEdges& hc_x, const GoodCycle& gc,
                            const std::optional<CycleEdges>& hc_y) {
  if (!cycle_contains_edge(hc_x, gc.b1, gc.b4))
    throw Error("EdgeNotOnCycle", "hc_x does not contain edge b1b4");
  if (hc_y && !cycle_contains_edge(*hc_y, gc.b2, gc.b3))
    throw Error("EdgeNotOnCycle", "hc_y does not contain edge b2b3");
  std::set<std::pair<int, int>> acc(hc_x.begin(), hc_x.end());
  auto toggle = [&acc](int u, int v) {
    std::pair<int, int> key{std::min(u, v), std::max(u, v)};
    auto it = acc.find(key);
    if (it != acc.end())
      acc.erase(it);
    else
      acc.insert(key);
  };
  for (const auto& [u, v] : good_cycle_edges(gc)) toggle(u, v);
  if (hc_y)
    for (const auto& [u, v] : *hc_y) toggle(u, v);
  CycleEdges result(acc.begin(), acc.end());
  if (!is_hamiltonian_cycle(bg, result) || !cycle_contains_edge(result, gc.b1, gc.b2))
    throw Error("GlueNotHamiltonian", "glued edge set is not a Hamiltonian cycle through b1b2");
  return result;
}

}  // namespace bghc
