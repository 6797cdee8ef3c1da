#include <doctest.h>

#include <set>

#include "bghc/multigraph.hpp"

using namespace bghc;

namespace {

// Independent min-cut oracle: all vertex bipartitions.
int brute_min_cut(const Multigraph& g) {
  int best = INT32_MAX;
  for (int mask = 1; mask < (1 << g.n) - 1; ++mask) {
    int cut = 0;
    for (const MEdge& e : g.edges) {
      bool us = mask & (1 << e.u);
      bool vs = mask & (1 << e.v);
      if (us != vs) ++cut;
    }
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

TEST_CASE("spanning tree enumeration") {
  CHECK(enumerate_spanning_trees(mg_cycle(3)).size() == 3);
  CHECK(enumerate_spanning_trees(mg_complete(4)).size() == 16);  // Kirchhoff checked inside
  // two vertices joined by three parallel edges
  auto g = Multigraph::make(2, {{0, 0, 1}, {1, 0, 1}, {2, 0, 1}});
  auto fam = enumerate_spanning_trees(g);
  CHECK(fam.bases == std::vector<Basis>{{0}, {1}, {2}});
  CHECK(kirchhoff_count(mg_complete(5)) == 125);
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity(mg_cycle(5)) == 2);
  CHECK(edge_connectivity(mg_complete(4)) == 3);
  CHECK(edge_connectivity(mg_k2_sum_cycle(5)) == 2);
  CHECK(edge_connectivity(mg_k2_sum_cycle(5)) == brute_min_cut(mg_k2_sum_cycle(5)));
  // disconnected
  auto g = Multigraph::make(3, {{0, 0, 1}});
  CHECK(edge_connectivity(g) == 0);
  SUBCASE("max-flow matches the bipartition oracle on a small pool") {
    auto pool = enumerate_multigraph_pool(3, 4, 6, 0);
    for (const auto& h : pool) CHECK(edge_connectivity(h) == brute_min_cut(h));
  }
}

TEST_CASE("fundamental cycles") {
  SUBCASE("K_4 star tree") {
    auto g = mg_complete(4);  // ids: 0=01,1=02,2=03,3=12,4=13,5=23
    Basis star{0, 1, 2};
    auto fc = fundamental_cycle(g, star, 3);  // chord 12
    CHECK(fc.cycle_edges == std::vector<Element>{0, 1, 3});
    CHECK_THROWS_AS(fundamental_cycle(g, star, 0), Error);  // chord in tree
  }
  SUBCASE("parallel pair gives a 2-cycle") {
    auto g = mg_theta(1, 1, 2);  // ids 0,1 parallel between branch vertices
    auto fam = enumerate_spanning_trees(g);
    Basis tree{0, 2};  // parallel edge 0 + first edge of the length-2 path
    REQUIRE(fam.index_of(tree) >= 0);
    auto fc = fundamental_cycle(g, tree, 1);
    CHECK(fc.cycle_edges == std::vector<Element>{0, 1});
  }
  SUBCASE("path tree in C_4 with the closing chord") {
    auto g = mg_cycle(4);
    Basis path{0, 1, 2};
    auto fc = fundamental_cycle(g, path, 3);
    CHECK(fc.cycle_edges == std::vector<Element>{0, 1, 2, 3});
  }
}

TEST_CASE("xyz partition") {
  // path 0-1-2-3 inside C_4: ids 0=(0,1),1=(1,2),2=(2,3),3=(3,0)
  auto g = mg_cycle(4);
  SUBCASE("far ends") {
    auto part = xyz_partition(g, {0, 1, 2}, 0, 2);
    CHECK(part.x == std::vector<int>{0});
    CHECK(part.y == std::vector<int>{1, 2});
    CHECK(part.z == std::vector<int>{3});
  }
  SUBCASE("adjacent tree edges give a single-vertex Y") {
    auto g3 = mg_cycle(3);
    auto part = xyz_partition(g3, {0, 1}, 0, 1);
    CHECK(part.x == std::vector<int>{0});
    CHECK(part.y == std::vector<int>{1});
    CHECK(part.z == std::vector<int>{2});
  }
  SUBCASE("star tree") {
    auto k4 = mg_complete(4);  // 0=01,1=02,2=03
    auto part = xyz_partition(k4, {0, 1, 2}, 0, 1);
    CHECK(part.x == std::vector<int>{1});
    CHECK(part.z == std::vector<int>{2});
    CHECK(part.y == std::vector<int>{0, 3});
  }
}

TEST_CASE("contraction and deletion") {
  SUBCASE("contract a C_3 edge") {
    auto h = contract_edge(mg_cycle(3), 0);
    CHECK(h.n == 2);
    CHECK(h.m() == 2);  // two parallel edges, ids preserved
    CHECK(h.find_edge(1) != nullptr);
    CHECK(h.find_edge(2) != nullptr);
  }
  SUBCASE("contracting one of two parallels drops the other") {
    auto g = Multigraph::make(2, {{0, 0, 1}, {1, 0, 1}});
    auto h = contract_edge(g, 0);
    CHECK(h.n == 1);
    CHECK(h.m() == 0);
  }
  SUBCASE("delete a K_4 edge") {
    auto h = delete_edge(mg_complete(4), 0);
    CHECK(h.n == 4);
    CHECK(h.m() == 5);
    CHECK(edge_connectivity(h) == 2);
  }
  SUBCASE("minor tree families match the basis split") {
    auto g = mg_complete(4);
    auto fam = enumerate_spanning_trees(g);
    for (const MEdge& e : g.edges) {
      auto split = split_by_element(fam, e.id);
      auto cfam = enumerate_spanning_trees(contract_edge(g, e.id));
      auto dfam = enumerate_spanning_trees(delete_edge(g, e.id));
      CHECK(cfam.bases == split.contract_side.bases);
      CHECK(dfam.bases == split.delete_side.bases);
    }
  }
}

TEST_CASE("exceptional recognition") {
  CHECK(recognize_exceptional(mg_cycle(5)) == ExceptionalKind::CycleN);
  CHECK(recognize_exceptional(mg_k2_sum_cycle(5)) == ExceptionalKind::TwoSumC2Cn1);
  CHECK(recognize_exceptional(mg_complete(4)) == ExceptionalKind::Neither);
  CHECK(recognize_exceptional(mg_theta(1, 2, 2)) == ExceptionalKind::Neither);
  CHECK(recognize_exceptional(mg_theta(1, 1, 2)) == ExceptionalKind::Neither);
  CHECK(recognize_exceptional(mg_k2_sum_cycle(3)) == ExceptionalKind::TwoSumC2Cn1);
  auto shape = two_sum_shape(mg_k2_sum_cycle(4));
  CHECK(shape.cycle_edges.size() == 3);
}

TEST_CASE("pool enumeration modulo isomorphism") {
  SUBCASE("n=3, m<=3, connected") {
    auto pool = enumerate_multigraph_pool(3, 3, 3, 0);
    // path(1,1), triangle, path(2,1): exactly three classes
    CHECK(pool.size() == 3);
  }
  SUBCASE("canonical keys deduplicate relabelings") {
    auto a = Multigraph::make(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}});
    auto b = Multigraph::make(4, {{0, 2, 0}, {1, 0, 3}, {2, 3, 1}, {3, 1, 2}});
    CHECK(canonical_key(a) == canonical_key(b));
  }
  SUBCASE("2-edge-connected pool members are 2-edge-connected") {
    auto pool = enumerate_multigraph_pool(3, 4, 6, 2);
    for (const auto& g : pool) {
      CHECK(edge_connectivity(g) >= 2);
      auto fam = enumerate_spanning_trees(g);
      CHECK(static_cast<uint64_t>(fam.size()) == kirchhoff_count(g));
    }
    CHECK(!pool.empty());
  }
}
