#include "bghc/multigraph.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace bghc {

const MEdge* Multigraph::find_edge(int id) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), id,
                             [](const MEdge& e, int key) { return e.id < key; });
  if (it != edges.end() && it->id == id) return &*it;
  return nullptr;
}

int Multigraph::max_id() const {
  int mx = -1;
  for (const MEdge& e : edges) mx = std::max(mx, e.id);
  return mx;
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> deg(n, 0);
  for (const MEdge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

Multigraph Multigraph::make(int n, std::vector<MEdge> edges) {
  Multigraph g;
  g.n = n;
  std::sort(edges.begin(), edges.end(), [](const MEdge& a, const MEdge& b) { return a.id < b.id; });
  for (size_t i = 0; i < edges.size(); ++i) {
    const MEdge& e = edges[i];
    if (e.u == e.v) throw Error("LoopEdge", "loops are not allowed");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw Error("VertexOutOfRange", "edge endpoint outside vertex range");
    if (i > 0 && edges[i].id == edges[i - 1].id) throw Error("DuplicateEdgeId", "edge ids collide");
  }
  g.edges = std::move(edges);
  return g;
}

Multigraph mg_cycle(int n) {
  if (n < 2) throw Error("BadParams", "cycle needs n >= 2");
  std::vector<MEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, i, (i + 1) % n});
  return Multigraph::make(n, std::move(edges));
}

Multigraph mg_complete(int n) {
  if (n < 2) throw Error("BadParams", "complete graph needs n >= 2");
  std::vector<MEdge> edges;
  int id = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({id++, u, v});
  return Multigraph::make(n, std::move(edges));
}

Multigraph mg_k2_sum_cycle(int n) {
  if (n < 3) throw Error("BadParams", "k2_sum_cycle needs n >= 3");
  // Cycle C_{n-1} on vertices 0..n-2, plus vertex n-1 tied to vertex 0
  // by a parallel pair (the C_2).
  std::vector<MEdge> edges;
  int id = 0;
  int cyc = n - 1;
  if (cyc == 2) {
    edges.push_back({id++, 0, 1});
    edges.push_back({id++, 0, 1});
  } else {
    for (int i = 0; i < cyc; ++i) edges.push_back({id++, i, (i + 1) % cyc});
  }
  edges.push_back({id++, 0, n - 1});
  edges.push_back({id++, 0, n - 1});
  return Multigraph::make(n, std::move(edges));
}

Multigraph mg_theta(int a, int b, int c) {
  std::array<int, 3> len{a, b, c};
  for (int l : len)
    if (l < 1) throw Error("BadParams", "theta path lengths must be >= 1");
  int n = 2 + (a - 1) + (b - 1) + (c - 1);
  std::vector<MEdge> edges;
  int id = 0, next = 2;  // 0 and 1 are the two branch vertices
  for (int l : len) {
    int prev = 0;
    for (int step = 0; step < l - 1; ++step) {
      edges.push_back({id++, prev, next});
      prev = next++;
    }
    edges.push_back({id++, prev, 1});
  }
  return Multigraph::make(n, std::move(edges));
}

Multigraph mg_prism(int n) {
  if (n < 3) throw Error("BadParams", "prism needs n >= 3");
  std::vector<MEdge> edges;
  int id = 0;
  for (int i = 0; i < n; ++i) edges.push_back({id++, i, (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({id++, n + i, n + (i + 1) % n});
  for (int i = 0; i < n; ++i) edges.push_back({id++, i, n + i});
  return Multigraph::make(2 * n, std::move(edges));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

bool is_connected(const Multigraph& g) {
  if (g.n == 0) return false;
  UnionFind uf(g.n);
  int comps = g.n;
  for (const MEdge& e : g.edges)
    if (uf.unite(e.u, e.v)) --comps;
  return comps == 1;
}

namespace {

// Edmonds-Karp on the multiplicity capacity matrix.
int max_flow(std::vector<std::vector<int>> cap, int s, int t) {
  int n = static_cast<int>(cap.size());
  int flow = 0;
  while (true) {
    std::vector<int> prev(n, -1);
    std::queue<int> q;
    q.push(s);
    prev[s] = s;
    while (!q.empty() && prev[t] < 0) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = u;
          q.push(v);
        }
      }
    }
    if (prev[t] < 0) return flow;
    int aug = INT32_MAX;
    for (int v = t; v != s; v = prev[v]) aug = std::min(aug, cap[prev[v]][v]);
    for (int v = t; v != s; v = prev[v]) {
      cap[prev[v]][v] -= aug;
      cap[v][prev[v]] += aug;
    }
    flow += aug;
  }
}

}  // namespace

int edge_connectivity(const Multigraph& g) {
  if (g.n < 2) throw Error("BadParams", "edge connectivity needs n >= 2");
  if (!is_connected(g)) return 0;
  std::vector<std::vector<int>> cap(g.n, std::vector<int>(g.n, 0));
  for (const MEdge& e : g.edges) {
    ++cap[e.u][e.v];
    ++cap[e.v][e.u];
  }
  int best = INT32_MAX;
  for (int t = 1; t < g.n; ++t) best = std::min(best, max_flow(cap, 0, t));
  return best;
}

Multigraph delete_edge(const Multigraph& g, int edge_id) {
  if (!g.find_edge(edge_id)) throw Error("NoSuchEdge", "edge id not present");
  std::vector<MEdge> edges;
  for (const MEdge& e : g.edges)
    if (e.id != edge_id) edges.push_back(e);
  return Multigraph::make(g.n, std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, int edge_id) {
  const MEdge* ce = g.find_edge(edge_id);
  if (!ce) throw Error("NoSuchEdge", "edge id not present");
  int keep = std::min(ce->u, ce->v);
  int drop = std::max(ce->u, ce->v);
  std::vector<MEdge> edges;
  for (const MEdge& e : g.edges) {
    if (e.id == edge_id) continue;
    int u = e.u == drop ? keep : e.u;
    int v = e.v == drop ? keep : e.v;
    if (u == v) continue;  // parallel to the contracted edge: becomes a loop
    if (u > drop) --u;
    if (v > drop) --v;
    edges.push_back({e.id, u, v});
  }
  return Multigraph::make(g.n - 1, std::move(edges));
}

namespace {

// Bareiss fraction-free determinant of the reduced Laplacian.
int64_t laplacian_minor_det(const Multigraph& g) {
  int n = g.n - 1;
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n, 0));
  for (const MEdge& e : g.edges) {
    if (e.u > 0) a[e.u - 1][e.u - 1] += 1;
    if (e.v > 0) a[e.v - 1][e.v - 1] += 1;
    if (e.u > 0 && e.v > 0) {
      a[e.u - 1][e.v - 1] -= 1;
      a[e.v - 1][e.u - 1] -= 1;
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  __int128 det = sign * a[n - 1][n - 1];
  return static_cast<int64_t>(det);
}

}  // namespace

uint64_t kirchhoff_count(const Multigraph& g) {
  if (!is_connected(g)) return 0;
  int64_t det = laplacian_minor_det(g);
  return det < 0 ? 0 : static_cast<uint64_t>(det);
}

BasisFamily enumerate_spanning_trees(const Multigraph& g) {
  if (!is_connected(g)) throw Error("Disconnected", "spanning trees need a connected graph");
  int r = g.n - 1;
  std::vector<Basis> trees;
  if (r == 0) {
    trees.push_back({});
    return BasisFamily::make(std::max(0, g.max_id() + 1), std::move(trees));
  }
  int m = g.m();
  // All m-choose-(n-1) edge subsets, kept when they form a spanning tree.
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    UnionFind uf(g.n);
    bool acyclic = true;
    for (int i : idx) {
      const MEdge& e = g.edges[i];
      if (!uf.unite(e.u, e.v)) {
        acyclic = false;
        break;
      }
    }
    if (acyclic) {
      Basis b;
      b.reserve(r);
      for (int i : idx) b.push_back(g.edges[i].id);
      std::sort(b.begin(), b.end());
      trees.push_back(std::move(b));
    }
    // next combination
    int pos = r - 1;
    while (pos >= 0 && idx[pos] == m - r + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  auto fam = BasisFamily::make(g.max_id() + 1, std::move(trees));
  uint64_t expect = kirchhoff_count(g);
  if (expect != static_cast<uint64_t>(fam.size()))
    throw Error("TreeCountMismatch", "enumeration disagrees with the matrix-tree determinant");
  return fam;
}

namespace {

// Components of a forest given by edge ids; returns vertex -> component id.
std::vector<int> forest_components(const Multigraph& g, const std::vector<Element>& edge_ids) {
  UnionFind uf(g.n);
  for (Element id : edge_ids) {
    const MEdge* e = g.find_edge(id);
    if (e) uf.unite(e->u, e->v);
  }
  std::vector<int> comp(g.n);
  for (int v = 0; v < g.n; ++v) comp[v] = uf.find(v);
  return comp;
}

}  // namespace

FundamentalCycle fundamental_cycle(const Multigraph& g, const Basis& tree, Element chord) {
  if (basis_contains(tree, chord)) throw Error("ChordInTree", "chord must lie outside the tree");
  const MEdge* ce = g.find_edge(chord);
  if (!ce) throw Error("NoSuchEdge", "chord id not present");
  // BFS along tree edges from one chord end to the other.
  std::vector<std::vector<std::pair<int, Element>>> adj(g.n);
  for (Element id : tree) {
    const MEdge* e = g.find_edge(id);
    if (!e) throw Error("NoSuchEdge", "tree edge id not present");
    adj[e->u].push_back({e->v, id});
    adj[e->v].push_back({e->u, id});
  }
  std::vector<Element> via_edge(g.n, -1);
  std::vector<int> parent(g.n, -1);
  std::queue<int> q;
  q.push(ce->u);
  parent[ce->u] = ce->u;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, id] : adj[u]) {
      if (parent[v] < 0) {
        parent[v] = u;
        via_edge[v] = id;
        q.push(v);
      }
    }
  }
  if (parent[ce->v] < 0) throw Error("NotSpanning", "tree does not connect chord ends");
  FundamentalCycle fc;
  fc.chord = chord;
  fc.cycle_edges.push_back(chord);
  for (int v = ce->v; v != ce->u; v = parent[v]) fc.cycle_edges.push_back(via_edge[v]);
  std::sort(fc.cycle_edges.begin(), fc.cycle_edges.end());
  return fc;
}

XyzPartition xyz_partition(const Multigraph& g, const Basis& b1, Element e, Element f) {
  if (e == f || !basis_contains(b1, e) || !basis_contains(b1, f))
    throw Error("NotTreeEdge", "e and f must be distinct tree edges");
  const MEdge* fe = g.find_edge(f);
  const MEdge* ee = g.find_edge(e);
  std::vector<Element> minus_e, minus_f;
  for (Element id : b1) {
    if (id != e) minus_e.push_back(id);
    if (id != f) minus_f.push_back(id);
  }
  auto comp_e = forest_components(g, minus_e);
  auto comp_f = forest_components(g, minus_f);
  XyzPartition part;
  int f_side = comp_e[fe->u];  // both f-ends share a component of B1-e
  int e_side = comp_f[ee->u];
  std::vector<bool> in_x(g.n, false), in_z(g.n, false);
  for (int v = 0; v < g.n; ++v) {
    if (comp_e[v] != f_side) {
      part.x.push_back(v);
      in_x[v] = true;
    }
    if (comp_f[v] != e_side) {
      part.z.push_back(v);
      in_z[v] = true;
    }
  }
  for (int v = 0; v < g.n; ++v)
    if (!in_x[v] && !in_z[v]) part.y.push_back(v);
  if (part.x.empty() || part.y.empty() || part.z.empty())
    throw Error("DegeneratePartition", "X, Y, Z must all be nonempty");
  return part;
}

ExceptionalKind recognize_exceptional(const Multigraph& g) {
  if (!is_connected(g)) return ExceptionalKind::Neither;
  auto deg = g.degrees();
  bool all_two = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  if (all_two && g.m() == g.n) return ExceptionalKind::CycleN;
  if (g.m() != g.n + 1) return ExceptionalKind::Neither;
  // C_2 (+)_1 C_{n-1}: a degree-2 vertex joined by a parallel pair to one
  // vertex, and deleting it leaves a cycle.
  for (int p = 0; p < g.n; ++p) {
    if (deg[p] != 2) continue;
    std::vector<const MEdge*> inc;
    for (const MEdge& e : g.edges)
      if (e.u == p || e.v == p) inc.push_back(&e);
    if (inc.size() != 2) continue;
    int q0 = inc[0]->u == p ? inc[0]->v : inc[0]->u;
    int q1 = inc[1]->u == p ? inc[1]->v : inc[1]->u;
    if (q0 != q1) continue;
    std::vector<MEdge> rest;
    for (const MEdge& e : g.edges)
      if (e.u != p && e.v != p) rest.push_back(e);
    // relabel around the removed vertex
    for (MEdge& e : rest) {
      if (e.u > p) --e.u;
      if (e.v > p) --e.v;
    }
    Multigraph h = Multigraph::make(g.n - 1, std::move(rest));
    auto hdeg = h.degrees();
    bool cyc = h.m() == h.n && is_connected(h) &&
               std::all_of(hdeg.begin(), hdeg.end(), [](int d) { return d == 2; });
    if (cyc) return ExceptionalKind::TwoSumC2Cn1;
  }
  return ExceptionalKind::Neither;
}

TwoSumShape two_sum_shape(const Multigraph& g) {
  if (recognize_exceptional(g) != ExceptionalKind::TwoSumC2Cn1)
    throw Error("NotTwoSum", "graph is not C_2 (+)_1 C_{n-1}");
  auto deg = g.degrees();
  for (int p = 0; p < g.n; ++p) {
    if (deg[p] != 2) continue;
    std::vector<const MEdge*> inc;
    for (const MEdge& e : g.edges)
      if (e.u == p || e.v == p) inc.push_back(&e);
    int q0 = inc[0]->u == p ? inc[0]->v : inc[0]->u;
    int q1 = inc[1]->u == p ? inc[1]->v : inc[1]->u;
    if (q0 != q1) continue;
    std::vector<MEdge> rest;
    for (const MEdge& e : g.edges)
      if (e.u != p && e.v != p) rest.push_back(e);
    bool rest_all_two = true;
    {
      std::vector<int> rdeg(g.n, 0);
      for (const MEdge& e : rest) {
        ++rdeg[e.u];
        ++rdeg[e.v];
      }
      for (int v = 0; v < g.n; ++v)
        if (v != p && rdeg[v] != 2) rest_all_two = false;
    }
    if (!rest_all_two) continue;
    TwoSumShape shape;
    shape.pair_edges = {inc[0]->id, inc[1]->id};
    for (const MEdge& e : rest) shape.cycle_edges.push_back(e.id);
    std::sort(shape.cycle_edges.begin(), shape.cycle_edges.end());
    std::sort(shape.pair_edges.begin(), shape.pair_edges.end());
    return shape;
  }
  throw Error("NotTwoSum", "no parallel-pair pendant found");
}

std::string canonical_key(const Multigraph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(g.edges.size());
    for (const MEdge& e : g.edges) {
      int u = perm[e.u], v = perm[e.v];
      pairs.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(pairs.begin(), pairs.end());
    std::string key;
    key.reserve(pairs.size() * 2 + 2);
    key.push_back(static_cast<char>('0' + g.n));
    for (auto [u, v] : pairs) {
      key.push_back(static_cast<char>('a' + u));
      key.push_back(static_cast<char>('a' + v));
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

void multiplicity_assignments(int slots, int extra, std::vector<int>& mult,
                              const std::function<void(const std::vector<int>&)>& emit) {
  if (slots == static_cast<int>(mult.size())) {
    if (extra == 0) emit(mult);
    return;
  }
  // remaining slots take multiplicity 1 + t, distributing `extra`
  for (int t = 0; t <= extra; ++t) {
    mult.push_back(1 + t);
    multiplicity_assignments(slots, extra - t, mult, emit);
    mult.pop_back();
  }
}

}  // namespace

std::vector<Multigraph> enumerate_multigraph_pool(int n_min, int n_max, int m_max, int min_conn) {
  std::vector<Multigraph> pool;
  std::set<std::string> seen;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int np = static_cast<int>(pairs.size());
    for (int mask = 1; mask < (1 << np); ++mask) {
      std::vector<std::pair<int, int>> support;
      for (int i = 0; i < np; ++i)
        if (mask & (1 << i)) support.push_back(pairs[i]);
      int s = static_cast<int>(support.size());
      if (s > m_max) continue;
      {
        UnionFind uf(n);
        int comps = n;
        for (auto [u, v] : support)
          if (uf.unite(u, v)) --comps;
        if (comps != 1) continue;
      }
      for (int extra = 0; extra + s <= m_max; ++extra) {
        std::vector<int> acc;
        multiplicity_assignments(
            s, extra, acc, [&](const std::vector<int>& mults) {
              std::vector<MEdge> edges;
              int id = 0;
              for (int i = 0; i < s; ++i)
                for (int rep = 0; rep < mults[i]; ++rep)
                  edges.push_back({id++, support[i].first, support[i].second});
              Multigraph g = Multigraph::make(n, std::move(edges));
              if (min_conn > 0 && edge_connectivity(g) < min_conn) return;
              std::string key = canonical_key(g);
              if (seen.insert(key).second) pool.push_back(std::move(g));
            });
      }
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Multigraph& a, const Multigraph& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.m() != b.m()) return a.m() < b.m();
    return canonical_key(a) < canonical_key(b);
  });
  return pool;
}

}  // namespace bghc
