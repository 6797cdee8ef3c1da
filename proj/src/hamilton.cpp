#include "bghc/hamilton.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace bghc {

namespace {

struct DfsCounter {
  const BasisGraph& bg;
  int home;                 // cycle closes here
  std::vector<bool> used;
  uint64_t count = 0;
  uint64_t cap;
  std::vector<CycleEdges>* sink = nullptr;  // set when enumerating
  std::vector<int> path;
  std::vector<int> scratch_;

  DfsCounter(const BasisGraph& bg_, int home_, uint64_t cap_)
      : bg(bg_), home(home_), used(bg_.num_vertices, false), cap(cap_),
        scratch_(bg_.num_vertices, 0) {}

  bool full() const { return count >= cap; }

  // Sound pruning: any completion is a cur -> ... -> home path through all
  // unvisited vertices, so each unvisited vertex needs two neighbors inside
  // {unvisited} u {cur, home}, and that region must be connected.
  bool completable(int cur) {
    int n = bg.num_vertices;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      int avail = 0;
      for (int x : bg.adj[w]) {
        if (!used[x] || x == cur || x == home) {
          if (++avail == 2) break;
        }
      }
      if (avail < 2) return false;
    }
    // BFS over unvisited from cur; home re-enters as an allowed endpoint.
    std::vector<int>& seen = scratch_;
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> queue{cur};
    seen[cur] = 1;
    size_t head = 0;
    while (head < queue.size()) {
      int x = queue[head++];
      for (int y : bg.adj[x]) {
        if (seen[y] || (used[y] && y != home)) continue;
        seen[y] = 1;
        queue.push_back(y);
      }
    }
    for (int w = 0; w < n; ++w)
      if (!used[w] && !seen[w]) return false;
    return true;
  }

  void run(int cur, int depth) {
    if (full() || out_of_budget) return;
    if (budget) {
      if (++nodes > *budget) {
        out_of_budget = true;
        return;
      }
    }
    if (depth == bg.num_vertices) {
      if (bg.has_edge(cur, home)) {
        ++count;
        if (sink) sink->push_back(cycle_from_vertex_seq(path));
      }
      return;
    }
    if (!completable(cur)) return;
    for (int next : bg.adj[cur]) {
      if (used[next]) continue;
      used[next] = true;
      path.push_back(next);
      run(next, depth + 1);
      path.pop_back();
      used[next] = false;
      if (full() || out_of_budget) return;
    }
  }

  std::optional<uint64_t> budget;
  uint64_t nodes = 0;
  bool out_of_budget = false;
};

void check_edge(const BasisGraph& bg, int u, int v) {
  if (bg.num_vertices < 3) throw Error("TooSmall", "needs at least 3 vertices");
  if (u < 0 || v < 0 || u >= bg.num_vertices || v >= bg.num_vertices || !bg.has_edge(u, v))
    throw Error("NotAnEdge", "uv is not an edge");
}

}  // namespace

HcCount count_hc_through_edge(const BasisGraph& bg, int u, int v, std::optional<uint64_t> cap) {
  check_edge(bg, u, v);
  uint64_t limit = cap.value_or(UINT64_MAX);
  if (limit == 0) return {0, true};
  // Fix the direction u -> v; each undirected cycle through uv is visited once.
  DfsCounter dfs(bg, u, limit);
  dfs.used[u] = true;
  dfs.used[v] = true;
  dfs.path = {u, v};
  dfs.run(v, 2);
  return {dfs.count, dfs.count >= limit};
}

std::optional<HcCount> count_hc_budgeted(const BasisGraph& bg, int u, int v, uint64_t cap,
                                         uint64_t node_budget) {
  check_edge(bg, u, v);
  if (cap == 0) return HcCount{0, true};
  DfsCounter dfs(bg, u, cap);
  dfs.budget = node_budget;
  dfs.used[u] = true;
  dfs.used[v] = true;
  dfs.path = {u, v};
  dfs.run(v, 2);
  if (dfs.out_of_budget && dfs.count < cap) return std::nullopt;
  return HcCount{dfs.count, dfs.count >= cap};
}

uint64_t count_hc_through_edge_dp(const BasisGraph& bg, int u, int v) {
  check_edge(bg, u, v);
  int n = bg.num_vertices;
  if (n > 20) throw Error("TooLarge", "subset DP limited to 20 vertices");
  // Count Hamiltonian u-v paths (then the uv edge closes the cycle).
  // Relabel so u is last; masks range over the other n-1 vertices.
  std::vector<int> relabel(n);
  {
    int next = 0;
    for (int w = 0; w < n; ++w)
      if (w != u) relabel[w] = next++;
    relabel[u] = n - 1;
  }
  int nm = n - 1;
  std::vector<std::vector<int>> adj(nm);  // among non-u vertices
  std::vector<bool> adj_u(nm, false);
  for (int w = 0; w < n; ++w) {
    if (w == u) continue;
    for (int x : bg.adj[w]) {
      if (x == u)
        adj_u[relabel[w]] = true;
      else
        adj[relabel[w]].push_back(relabel[x]);
    }
  }
  int start = relabel[v];
  size_t total = size_t{1} << nm;
  // dp[mask * nm + w]: paths from v covering mask, ending at w.
  std::vector<uint64_t> dp(total * nm, 0);
  dp[(size_t{1} << start) * nm + start] = 1;
  for (size_t mask = 1; mask < total; ++mask) {
    if (!(mask & (size_t{1} << start))) continue;
    for (int w = 0; w < nm; ++w) {
      uint64_t cur = dp[mask * nm + w];
      if (cur == 0) continue;
      for (int x : adj[w]) {
        size_t bit = size_t{1} << x;
        if (mask & bit) continue;
        dp[(mask | bit) * nm + x] += cur;
      }
    }
  }
  uint64_t result = 0;
  size_t full = total - 1;
  for (int w = 0; w < nm; ++w)
    if (w != start && adj_u[w]) result += dp[full * nm + w];
  return result;
}

std::vector<CycleEdges> enumerate_hc_through_edge(const BasisGraph& bg, int u, int v,
                                                  uint64_t max_count) {
  check_edge(bg, u, v);
  std::vector<CycleEdges> out;
  if (max_count == 0) return out;
  DfsCounter dfs(bg, u, max_count);
  dfs.sink = &out;
  dfs.used[u] = true;
  dfs.used[v] = true;
  dfs.path = {u, v};
  dfs.run(v, 2);
  return out;
}

std::optional<std::vector<CycleEdges>> enumerate_hc_budgeted(const BasisGraph& bg, int u, int v,
                                                             uint64_t max_count,
                                                             uint64_t node_budget) {
  check_edge(bg, u, v);
  std::vector<CycleEdges> out;
  if (max_count == 0) return out;
  DfsCounter dfs(bg, u, max_count);
  dfs.sink = &out;
  dfs.budget = node_budget;
  dfs.used[u] = true;
  dfs.used[v] = true;
  dfs.path = {u, v};
  dfs.run(v, 2);
  if (dfs.out_of_budget && out.size() < max_count) return std::nullopt;
  return out;
}

HcCount hc_star(const BasisGraph& bg, std::optional<uint64_t> cap,
                const std::vector<std::pair<int, int>>* representatives) {
  std::vector<std::pair<int, int>> all;
  if (!representatives) {
    all = bg.edges();
    representatives = &all;
  }
  if (representatives->empty()) throw Error("NoEdges", "basis graph has no edges");
  HcCount best{UINT64_MAX, false};
  for (const auto& [u, v] : *representatives) {
    HcCount c = count_hc_through_edge(bg, u, v, cap);
    if (!c.capped && c.value < best.value) best = c;
    if (c.capped && best.value > c.value) best = c;  // capped floor
    if (!best.capped && best.value == 0) break;
  }
  return best;
}

WitnessSet witnesses_complete(const BasisGraph& bg, int u, int v, uint64_t cap) {
  check_edge(bg, u, v);
  if (!bg.is_complete()) throw Error("NotComplete", "witnesses_complete needs a complete graph");
  WitnessSet ws;
  ws.edge = {u, v};
  std::vector<int> rest;
  for (int w = 0; w < bg.num_vertices; ++w)
    if (w != u && w != v) rest.push_back(w);
  // v1 v2 sigma(rest): one sequence per undirected cycle through uv.
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> seq{u, v};
    seq.insert(seq.end(), rest.begin(), rest.end());
    ws.cycles.push_back(cycle_from_vertex_seq(seq));
    if (ws.cycles.size() >= cap) break;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return ws;
}

WitnessSet witnesses_prism(const BasisGraph& bg, const std::vector<std::pair<int, int>>& coords,
                           int u, int v, uint64_t cap) {
  check_edge(bg, u, v);
  int n = bg.num_vertices;
  if (n % 2 != 0) throw Error("NotPrism", "odd vertex count");
  int t = n / 2;
  std::vector<std::vector<int>> at(2, std::vector<int>(t, -1));
  for (int w = 0; w < n; ++w) {
    auto [copy, col] = coords[w];
    if (copy < 0 || copy > 1 || col < 0 || col >= t || at[copy][col] != -1)
      throw Error("NotPrism", "bad product coordinates");
    at[copy][col] = w;
  }
  auto vertex = [&](int copy, int col) { return at[copy][col]; };

  WitnessSet ws;
  ws.edge = {u, v};
  std::set<CycleEdges> dedup;
  auto push = [&](const CycleEdges& c) {
    if (dedup.insert(c).second)
      ws.cycles.push_back(c);
    else
      ++ws.collisions;
  };

  auto [cu, colu] = coords[u];
  auto [cv, colv] = coords[v];

  if (t == 2) {
    // C_4: the whole graph is the one Hamiltonian cycle.
    CycleEdges cyc = cycle_from_vertex_seq({vertex(0, 0), vertex(0, 1), vertex(1, 1), vertex(1, 0)});
    if (!is_hamiltonian_cycle(bg, cyc) || !cycle_contains_edge(cyc, u, v))
      throw Error("NotPrism", "product coordinates do not match the graph");
    push(cyc);
    return ws;
  }

  if (cu == cv) {
    // Intra-copy edge. Cycles C1 in copy cu through (colu,colv), a square S
    // across some other C1 edge, and any C2 through that edge's columns.
    int a = cu, b = 1 - cu;
    std::vector<int> rest;
    for (int c = 0; c < t; ++c)
      if (c != colu && c != colv) rest.push_back(c);
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> cols1{colu, colv};
      cols1.insert(cols1.end(), rest.begin(), rest.end());
      // edges of C1 as ordered column pairs, skipping (colu,colv)
      for (int i = 1; i < t; ++i) {
        int x = cols1[i], y = cols1[(i + 1) % t];
        // C2 through columns (x,y) in copy b
        std::vector<int> rest2;
        for (int c = 0; c < t; ++c)
          if (c != x && c != y) rest2.push_back(c);
        std::sort(rest2.begin(), rest2.end());
        do {
          std::vector<int> cols2{x, y};
          cols2.insert(cols2.end(), rest2.begin(), rest2.end());
          std::set<std::pair<int, int>> acc;
          auto toggle = [&acc](int p, int q) {
            auto key = std::minmax(p, q);
            auto it = acc.find(key);
            if (it != acc.end())
              acc.erase(it);
            else
              acc.insert(key);
          };
          for (int i1 = 0; i1 < t; ++i1)
            toggle(vertex(a, cols1[i1]), vertex(a, cols1[(i1 + 1) % t]));
          for (int i2 = 0; i2 < t; ++i2)
            toggle(vertex(b, cols2[i2]), vertex(b, cols2[(i2 + 1) % t]));
          toggle(vertex(a, x), vertex(a, y));
          toggle(vertex(a, x), vertex(b, x));
          toggle(vertex(b, x), vertex(b, y));
          toggle(vertex(b, y), vertex(a, y));
          CycleEdges cyc(acc.begin(), acc.end());
          if (!is_hamiltonian_cycle(bg, cyc) || !cycle_contains_edge(cyc, u, v))
            throw Error("NotPrism", "product construction produced a non-cycle");
          push(cyc);
          if (ws.cycles.size() >= cap) return ws;
        } while (std::next_permutation(rest2.begin(), rest2.end()));
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return ws;
  }

  // Cross edge: colu == colv; pick a companion column j, run C1 through
  // (col,j) in copy 0 and C2 through (col,j) in copy 1, square across.
  if (colu != colv) throw Error("NotPrism", "edge joins different columns across copies");
  int col = colu;
  for (int j = 0; j < t; ++j) {
    if (j == col) continue;
    std::vector<int> rest;
    for (int c = 0; c < t; ++c)
      if (c != col && c != j) rest.push_back(c);
    std::sort(rest.begin(), rest.end());
    std::vector<std::vector<int>> firsts;
    do {
      std::vector<int> cols{col, j};
      cols.insert(cols.end(), rest.begin(), rest.end());
      firsts.push_back(cols);
    } while (std::next_permutation(rest.begin(), rest.end()));
    for (const auto& cols1 : firsts) {
      for (const auto& cols2 : firsts) {
        std::set<std::pair<int, int>> acc;
        auto toggle = [&acc](int p, int q) {
          auto key = std::minmax(p, q);
          auto it = acc.find(key);
          if (it != acc.end())
            acc.erase(it);
          else
            acc.insert(key);
        };
        for (int i1 = 0; i1 < t; ++i1) toggle(vertex(0, cols1[i1]), vertex(0, cols1[(i1 + 1) % t]));
        for (int i2 = 0; i2 < t; ++i2) toggle(vertex(1, cols2[i2]), vertex(1, cols2[(i2 + 1) % t]));
        toggle(vertex(0, col), vertex(0, j));
        toggle(vertex(0, j), vertex(1, j));
        toggle(vertex(1, j), vertex(1, col));
        toggle(vertex(1, col), vertex(0, col));
        CycleEdges cyc(acc.begin(), acc.end());
        if (!is_hamiltonian_cycle(bg, cyc) || !cycle_contains_edge(cyc, u, v))
          throw Error("NotPrism", "product construction produced a non-cycle");
        push(cyc);
        if (ws.cycles.size() >= cap) return ws;
      }
    }
  }
  return ws;
}

void validate_witness_set(const BasisGraph& bg, const WitnessSet& ws) {
  std::set<CycleEdges> seen;
  for (const CycleEdges& c : ws.cycles) {
    if (!is_hamiltonian_cycle(bg, c))
      throw Error("BadWitness", "witness is not a Hamiltonian cycle");
    if (!cycle_contains_edge(c, ws.edge.first, ws.edge.second))
      throw Error("BadWitness", "witness misses the designated edge");
    if (!seen.insert(c).second) throw Error("BadWitness", "duplicate witness");
  }
}

}  // namespace bghc
