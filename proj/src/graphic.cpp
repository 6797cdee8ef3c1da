#include "bghc/graphic.hpp"

#include <algorithm>

namespace bghc {

namespace {

void exchanged_elements(const BasisFamily& family, int b1, int b2, Element& e, Element& g_elt) {
  const Basis& B1 = family.bases[b1];
  const Basis& B2 = family.bases[b2];
  e = -1;
  g_elt = -1;
  for (Element x : B1)
    if (!basis_contains(B2, x)) e = x;
  for (Element x : B2)
    if (!basis_contains(B1, x)) g_elt = x;
  if (e < 0 || g_elt < 0) throw Error("NotAnEdge", "bases are not adjacent");
}

// Which side of the X/Y/Z partition a vertex lies on.
enum class Side { X, Y, Z };

struct SideMap {
  std::vector<Side> side;
  Side of(int v) const { return side[v]; }
};

SideMap side_map(const Multigraph& g, const XyzPartition& part) {
  SideMap sm;
  sm.side.assign(g.n, Side::Y);
  for (int v : part.x) sm.side[v] = Side::X;
  for (int v : part.z) sm.side[v] = Side::Z;
  return sm;
}

void emit(const BasisFamily& family, const BasisGraph& bg, int b1, int b2,
          const Basis& B4, const Basis& B3, std::vector<GoodCycle>& out) {
  int i4 = family.index_of(B4);
  int i3 = family.index_of(B3);
  if (i4 < 0 || i3 < 0)
    throw Error("TemplateNotBasis", "fact template produced a non-basis");
  out.push_back(make_good_cycle(family, bg, b1, b2, i3, i4));
}

}  // namespace

std::vector<GoodCycle> good_cycles_at(const Multigraph& g, const BasisFamily& family,
                                      const BasisGraph& bg, int b1, int b2, Element f) {
  Element e, g_elt;
  exchanged_elements(family, b1, b2, e, g_elt);
  const Basis& B1 = family.bases[b1];
  const Basis& B2 = family.bases[b2];
  if (f == e || !basis_contains(B1, f))
    throw Error("InvalidExchange", "f must lie in B1 - e");

  FundamentalCycle fc = fundamental_cycle(g, B1, g_elt);
  bool f_on_cycle = std::binary_search(fc.cycle_edges.begin(), fc.cycle_edges.end(), f);
  XyzPartition part = xyz_partition(g, B1, e, f);
  SideMap sm = side_map(g, part);

  std::vector<GoodCycle> out;
  if (!f_on_cycle) {
    // w in E[X u Y, Z] other than f
    for (const MEdge& edge : g.edges) {
      if (edge.id == f) continue;
      Side a = sm.of(edge.u), b = sm.of(edge.v);
      bool crosses_z = (a == Side::Z) != (b == Side::Z);
      if (!crosses_z) continue;
      emit(family, bg, b1, b2, basis_minus_plus(B1, f, edge.id),
           basis_minus_plus(B2, f, edge.id), out);
    }
  } else {
    for (const MEdge& edge : g.edges) {
      Side a = sm.of(edge.u), b = sm.of(edge.v);
      if (a > b) std::swap(a, b);
      if (a == Side::Y && b == Side::Z && edge.id != f) {
        Element l = edge.id;
        emit(family, bg, b1, b2, basis_minus_plus(B1, f, l), basis_minus_plus(B2, f, l), out);
        emit(family, bg, b1, b2, basis_minus_plus(B1, f, g_elt), basis_minus_plus(B2, f, l), out);
      } else if (a == Side::X && b == Side::Y && edge.id != e) {
        Element h = edge.id;
        emit(family, bg, b1, b2, basis_minus_plus(B1, f, g_elt), basis_minus_plus(B2, f, h), out);
      } else if (a == Side::X && b == Side::Z && edge.id != g_elt) {
        Element j = edge.id;
        emit(family, bg, b1, b2, basis_minus_plus(B1, f, j), basis_minus_plus(B2, g_elt, j), out);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GoodCycle> good_cycles_graphic(const Multigraph& g, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2) {
  if (!bg.has_edge(b1, b2)) throw Error("NotAnEdge", "b1b2 is not a basis-graph edge");
  Element e, g_elt;
  exchanged_elements(family, b1, b2, e, g_elt);
  std::vector<GoodCycle> out;
  for (Element f : family.bases[b1]) {
    if (f == e) continue;
    auto part = good_cycles_at(g, family, bg, b1, b2, f);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bghc
