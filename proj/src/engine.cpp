#include "bghc/engine.hpp"

#include <algorithm>
#include <set>

#include "bghc/graphic.hpp"

namespace bghc {

std::vector<std::pair<int, int>> FamilyInstance::prism_coords() const {
  throw Error("NotPrism", "instance has no product structure");
}

// ---------------------------------------------------------------- graphic

GraphicInstance::GraphicInstance(Multigraph g) : g_(std::move(g)) {
  init(enumerate_spanning_trees(g_));
}

std::string GraphicInstance::describe() const {
  return "graphic(n=" + std::to_string(g_.n) + ",m=" + std::to_string(g_.m()) + ")";
}

std::vector<GoodCycle> GraphicInstance::template_good_cycles(int b1, int b2) const {
  return good_cycles_graphic(g_, family_, graph_, b1, b2);
}

MinorLink GraphicInstance::contract_minor(Element e) const {
  auto it = contract_cache_.find(e);
  if (it != contract_cache_.end()) return it->second;
  auto child = std::make_shared<GraphicInstance>(contract_edge(g_, e));
  MinorLink link;
  link.child = child;
  link.parent_to_child.assign(family_.size(), -1);
  for (int i = 0; i < family_.size(); ++i) {
    const Basis& b = family_.bases[i];
    if (!basis_contains(b, e)) continue;
    Basis reduced;
    for (Element x : b)
      if (x != e) reduced.push_back(x);
    link.parent_to_child[i] = child->family().index_of(reduced);
    if (link.parent_to_child[i] < 0)
      throw Error("MinorMismatch", "contracted tree missing from minor family");
  }
  contract_cache_[e] = link;
  return link;
}

MinorLink GraphicInstance::delete_minor(Element e) const {
  auto it = delete_cache_.find(e);
  if (it != delete_cache_.end()) return it->second;
  auto child = std::make_shared<GraphicInstance>(delete_edge(g_, e));
  MinorLink link;
  link.child = child;
  link.parent_to_child.assign(family_.size(), -1);
  for (int i = 0; i < family_.size(); ++i) {
    const Basis& b = family_.bases[i];
    if (basis_contains(b, e)) continue;
    link.parent_to_child[i] = child->family().index_of(b);
    if (link.parent_to_child[i] < 0)
      throw Error("MinorMismatch", "tree missing from deletion minor family");
  }
  delete_cache_[e] = link;
  return link;
}

FamilyInstance::Structure GraphicInstance::structure() const {
  switch (recognize_exceptional(g_)) {
    case ExceptionalKind::CycleN:
      return Structure::CompleteBG;
    case ExceptionalKind::TwoSumC2Cn1:
      return Structure::PrismBG;
    default:
      return Structure::General;
  }
}

std::vector<std::pair<int, int>> GraphicInstance::prism_coords() const {
  TwoSumShape shape = two_sum_shape(g_);
  std::vector<std::pair<int, int>> coords(family_.size());
  for (int i = 0; i < family_.size(); ++i) {
    const Basis& b = family_.bases[i];
    int copy = basis_contains(b, shape.pair_edges[0]) ? 0 : 1;
    int col = -1;
    for (size_t c = 0; c < shape.cycle_edges.size(); ++c)
      if (!basis_contains(b, shape.cycle_edges[c])) col = static_cast<int>(c);
    if (col < 0) throw Error("NotPrism", "tree drops no cycle edge");
    coords[i] = {copy, col};
  }
  return coords;
}

// ---------------------------------------------------------------- catalan

namespace {

Basis shift_above(const Basis& b, Element removed) {
  Basis out;
  out.reserve(b.size());
  for (Element x : b) out.push_back(x > removed ? x - 1 : x);
  return out;
}

}  // namespace

CatalanInstance::CatalanInstance(GenCatalan m) {
  StrippedGenCatalan s = gencat_strip(m);
  m_ = s.stripped;
  init(enumerate_bases_paths(m_.matroid()));
}

std::string CatalanInstance::describe() const { return "gencat(Q=" + m_.q.word + ")"; }

std::vector<GoodCycle> CatalanInstance::template_good_cycles(int b1, int b2) const {
  if (m_.corank() < m_.rank() && !dual_cache_)
    dual_cache_ = std::make_unique<GencatDual>(make_gencat_dual(m_));
  return good_cycles_gencat_min(m_, family_, graph_, b1, b2, dual_cache_.get());
}

namespace {

MinorLink catalan_link(const BasisFamily& parent, const GenCatalan& minor, Element e,
                       bool contracted) {
  StrippedGenCatalan s = gencat_strip(minor);
  auto child = std::make_shared<CatalanInstance>(minor);
  MinorLink link;
  link.child = child;
  link.parent_to_child.assign(parent.size(), -1);
  for (int i = 0; i < parent.size(); ++i) {
    const Basis& b = parent.bases[i];
    if (basis_contains(b, e) != contracted) continue;
    Basis reduced;
    for (Element x : b) {
      if (x == e) continue;
      Element shifted = x > e ? x - 1 : x;
      Element mapped = s.old_to_new[shifted];
      if (mapped >= 0) reduced.push_back(mapped);  // isthmuses drop out
    }
    std::sort(reduced.begin(), reduced.end());
    link.parent_to_child[i] = child->family().index_of(reduced);
    if (link.parent_to_child[i] < 0)
      throw Error("MinorMismatch", "path-rule minor disagrees with the basis split");
  }
  return link;
}

}  // namespace

MinorLink CatalanInstance::contract_minor(Element e) const {
  auto it = contract_cache_.find(e);
  if (it != contract_cache_.end()) return it->second;
  MinorLink link = catalan_link(family_, gencat_contract(m_, e), e, true);
  contract_cache_[e] = link;
  return link;
}

MinorLink CatalanInstance::delete_minor(Element e) const {
  auto it = delete_cache_.find(e);
  if (it != delete_cache_.end()) return it->second;
  MinorLink link = catalan_link(family_, gencat_delete(m_, e), e, false);
  delete_cache_[e] = link;
  return link;
}

// ---------------------------------------------------------------- uniform

UniformInstance::UniformInstance(UniformSpec spec) : spec_(spec) {
  init(uniform_bases(spec_));
}

std::string UniformInstance::describe() const {
  return "uniform(r=" + std::to_string(spec_.r) + ",n=" + std::to_string(spec_.n) + ")";
}

std::vector<GoodCycle> UniformInstance::template_good_cycles(int b1, int b2) const {
  return good_cycles_uniform(spec_, family_, graph_, b1, b2);
}

MinorLink UniformInstance::contract_minor(Element e) const {
  auto it = contract_cache_.find(e);
  if (it != contract_cache_.end()) return it->second;
  auto child = std::make_shared<UniformInstance>(UniformSpec::make(spec_.r - 1, spec_.n - 1));
  MinorLink link;
  link.child = child;
  link.parent_to_child.assign(family_.size(), -1);
  for (int i = 0; i < family_.size(); ++i) {
    const Basis& b = family_.bases[i];
    if (!basis_contains(b, e)) continue;
    Basis reduced;
    for (Element x : b)
      if (x != e) reduced.push_back(x > e ? x - 1 : x);
    std::sort(reduced.begin(), reduced.end());
    link.parent_to_child[i] = child->family().index_of(reduced);
  }
  contract_cache_[e] = link;
  return link;
}

MinorLink UniformInstance::delete_minor(Element e) const {
  auto it = delete_cache_.find(e);
  if (it != delete_cache_.end()) return it->second;
  auto child = std::make_shared<UniformInstance>(UniformSpec::make(spec_.r, spec_.n - 1));
  MinorLink link;
  link.child = child;
  link.parent_to_child.assign(family_.size(), -1);
  for (int i = 0; i < family_.size(); ++i) {
    const Basis& b = family_.bases[i];
    if (basis_contains(b, e)) continue;
    link.parent_to_child[i] = child->family().index_of(shift_above(b, e));
  }
  delete_cache_[e] = link;
  return link;
}

FamilyInstance::Structure UniformInstance::structure() const {
  // BG(U_{1,n}) and BG(U_{n-1,n}) are complete.
  if (spec_.r == 1 || spec_.n - spec_.r == 1) return Structure::CompleteBG;
  return Structure::General;
}

// ----------------------------------------------------------- the recursion

namespace {

std::vector<int> invert_vertex_map(const std::vector<int>& parent_to_child, int child_size) {
  std::vector<int> child_to_parent(child_size, -1);
  for (int p = 0; p < static_cast<int>(parent_to_child.size()); ++p)
    if (parent_to_child[p] >= 0) child_to_parent[parent_to_child[p]] = p;
  return child_to_parent;
}

CycleEdges lift_cycle(const CycleEdges& c, const std::vector<int>& child_to_parent) {
  CycleEdges out;
  out.reserve(c.size());
  for (const auto& [u, v] : c) {
    int pu = child_to_parent[u];
    int pv = child_to_parent[v];
    out.emplace_back(std::min(pu, pv), std::max(pu, pv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WitnessSet witnesses_recursive(const FamilyInstance& inst, int b1, int b2,
                               const WitnessPolicy& policy) {
  const BasisGraph& bg = inst.graph();
  if (policy.depth > 32) throw Error("DepthExceeded", "witness recursion too deep");
  if (!bg.has_edge(b1, b2)) throw Error("NotAnEdge", "b1b2 is not a basis-graph edge");
  int N = bg.num_vertices;

  switch (inst.structure()) {
    case FamilyInstance::Structure::CompleteBG: {
      uint64_t all = 1;
      for (int i = 2; i <= N - 2 && all < 100000; ++i) all *= i;
      uint64_t cap = std::max<uint64_t>(policy.target, std::min<uint64_t>(all, 5000));
      WitnessSet ws = witnesses_complete(bg, b1, b2, cap);
      validate_witness_set(bg, ws);
      return ws;
    }
    case FamilyInstance::Structure::PrismBG: {
      WitnessSet ws =
          witnesses_prism(bg, inst.prism_coords(), b1, b2, std::max<uint64_t>(policy.target, 5000));
      validate_witness_set(bg, ws);
      return ws;
    }
    case FamilyInstance::Structure::General:
      break;
  }

  if (N <= policy.exhaustive_cutoff || inst.force_exhaustive()) {
    WitnessSet ws;
    ws.edge = {b1, b2};
    ws.cycles = enumerate_hc_through_edge(bg, b1, b2, std::max<uint64_t>(policy.target, 64));
    return ws;
  }

  std::vector<GoodCycle> good = inst.template_good_cycles(b1, b2);
  if (good.empty())
    throw Error("NoGoodCycle", inst.describe() + " has no template good cycle for this edge");

  WitnessSet ws;
  ws.edge = {b1, b2};
  std::set<CycleEdges> dedup;

  uint64_t cw_target = std::max<uint64_t>(1, (policy.target + good.size() - 1) / good.size());
  uint64_t dw_target = 1;

  for (int round = 0; round < policy.max_rounds; ++round) {
    for (const GoodCycle& gc : good) {
      MinorLink cl = inst.contract_minor(gc.e);
      MinorLink dl = inst.delete_minor(gc.e);
      auto c_to_parent = invert_vertex_map(cl.parent_to_child, cl.child->family().size());
      auto d_to_parent = invert_vertex_map(dl.parent_to_child, dl.child->family().size());

      int cb1 = cl.parent_to_child[gc.b1];
      int cb4 = cl.parent_to_child[gc.b4];
      if (cb1 < 0 || cb4 < 0) throw Error("MinorMismatch", "good-cycle vertices missed the split");

      std::vector<CycleEdges> contract_side;
      if (cl.child->family().size() == 2) {
        contract_side.clear();  // handled by the degenerate branch below
      } else {
        WitnessPolicy sub = policy;
        sub.target = cw_target;
        sub.depth = policy.depth + 1;
        WitnessSet cw = witnesses_recursive(*cl.child, cb1, cb4, sub);
        for (const CycleEdges& c : cw.cycles) contract_side.push_back(lift_cycle(c, c_to_parent));
      }

      std::vector<std::optional<CycleEdges>> delete_side;
      if (dl.child->family().size() == 2) {
        delete_side.push_back(std::nullopt);  // BG(M'') = K_2: its edge is b2b3
      } else {
        int db2 = dl.parent_to_child[gc.b2];
        int db3 = dl.parent_to_child[gc.b3];
        if (db2 < 0 || db3 < 0)
          throw Error("MinorMismatch", "good-cycle vertices missed the split");
        // budgeted search first; recurse through the child's own structure
        // when the search wanders, plain exhaustion as the last resort
        std::vector<CycleEdges> found;
        auto quick = enumerate_hc_budgeted(dl.child->graph(), db2, db3, dw_target, 200000);
        if (quick) {
          found = std::move(*quick);
        } else {
          try {
            WitnessPolicy sub = policy;
            sub.target = dw_target;
            sub.depth = policy.depth + 1;
            found = witnesses_recursive(*dl.child, db2, db3, sub).cycles;
          } catch (const Error&) {
            found = enumerate_hc_through_edge(dl.child->graph(), db2, db3, dw_target);
          }
        }
        if (found.empty()) throw Error("NotEdgeHamiltonian", "no delete-side cycle found");
        for (const CycleEdges& c : found) delete_side.emplace_back(lift_cycle(c, d_to_parent));
      }

      if (contract_side.empty() && cl.child->family().size() == 2) {
        // Contract side is a single BG edge {b1,b4}: the glued cycle is
        // good Δ hc_y, validated directly.
        for (const auto& hy : delete_side) {
          if (!hy) throw Error("GlueNotHamiltonian", "both sides degenerate");
          std::set<std::pair<int, int>> acc(hy->begin(), hy->end());
          for (const auto& [p, q] : good_cycle_edges(gc)) {
            auto key = std::minmax(p, q);
            if (!acc.erase(key)) acc.insert(key);
          }
          CycleEdges merged(acc.begin(), acc.end());
          if (!is_hamiltonian_cycle(bg, merged) || !cycle_contains_edge(merged, b1, b2))
            throw Error("GlueNotHamiltonian", "degenerate contract-side glue failed");
          if (dedup.insert(merged).second)
            ws.cycles.push_back(merged);
          else
            ++ws.collisions;
          if (ws.cycles.size() >= policy.target) return ws;
        }
        continue;
      }

      for (const CycleEdges& hx : contract_side) {
        for (const auto& hy : delete_side) {
          CycleEdges merged = glue_hamiltonian(bg, hx, gc, hy);
          if (dedup.insert(merged).second)
            ws.cycles.push_back(merged);
          else
            ++ws.collisions;
          if (ws.cycles.size() >= policy.target) return ws;
        }
      }
    }
    if (ws.cycles.size() >= policy.target) break;
    cw_target *= 2;
    dw_target *= 4;
  }
  return ws;
}

}  // namespace bghc
