#include "bghc/latticepath.hpp"

#include <algorithm>
#include <functional>

namespace bghc {

int StepWord::n_count() const {
  return static_cast<int>(std::count(word.begin(), word.end(), 'N'));
}

int StepWord::prefix_n(int t) const {
  return static_cast<int>(std::count(word.begin(), word.begin() + t, 'N'));
}

StepWord StepWord::parse(const std::string& s) {
  for (char c : s)
    if (c != 'N' && c != 'E') throw Error("BadStepWord", "alphabet is {N,E}");
  return StepWord{s};
}

StepWord word_from_n_positions(int length, const std::vector<int>& ns) {
  std::string w(length, 'E');
  for (int i : ns) {
    if (i < 0 || i >= length) throw Error("ElementOutOfRange", "N position outside word");
    w[i] = 'N';
  }
  return StepWord{w};
}

std::vector<int> n_positions(const StepWord& w) {
  std::vector<int> out;
  for (int i = 0; i < w.length(); ++i)
    if (w.word[i] == 'N') out.push_back(i);
  return out;
}

LatticePathMatroid LatticePathMatroid::make(StepWord p, StepWord q) {
  if (p.length() != q.length() || p.n_count() != q.n_count())
    throw Error("BadBoundingPair", "P and Q must share length and step counts");
  for (int t = 1; t <= q.length(); ++t)
    if (p.prefix_n(t) > q.prefix_n(t)) throw Error("PAboveQ", "P rises above Q");
  return LatticePathMatroid{std::move(p), std::move(q)};
}

bool LatticePathMatroid::admits(const Basis& n_set) const {
  if (static_cast<int>(n_set.size()) != rank()) return false;
  int k = 0;
  size_t idx = 0;
  for (int t = 0; t < ground(); ++t) {
    if (idx < n_set.size() && n_set[idx] == t) {
      ++k;
      ++idx;
    }
    if (k < p.prefix_n(t + 1) || k > q.prefix_n(t + 1)) return false;
  }
  return idx == n_set.size();
}

std::vector<std::pair<int, int>> standard_presentation(const LatticePathMatroid& m) {
  auto a = n_positions(m.q);
  auto b = n_positions(m.p);
  std::vector<std::pair<int, int>> intervals;
  intervals.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) intervals.emplace_back(a[i], b[i]);
  return intervals;
}

BasisFamily enumerate_bases_paths(const LatticePathMatroid& m) {
  int L = m.ground();
  int r = m.rank();
  std::vector<int> lo(L + 1), hi(L + 1);
  for (int t = 0; t <= L; ++t) {
    lo[t] = m.p.prefix_n(t);
    hi[t] = m.q.prefix_n(t);
  }
  std::vector<Basis> bases;
  Basis cur;
  // DFS over prefixes; k = #N so far.
  std::function<void(int, int)> rec = [&](int t, int k) {
    if (t == L) {
      if (k == r) bases.push_back(cur);
      return;
    }
    // E step
    if (k >= lo[t + 1] && r - k <= L - t - 1) rec(t + 1, k);
    // N step
    if (k + 1 <= hi[t + 1]) {
      cur.push_back(t);
      rec(t + 1, k + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return BasisFamily::make(L, std::move(bases));
}

namespace {

// Tight per-prefix N-count band: lo2[t] <= k <= hi[t] is reachable and
// completable. need[t] accounts for future lower bounds.
struct Bands {
  std::vector<int> lo2, hi;
};

Bands bands(const LatticePathMatroid& m) {
  int L = m.ground();
  int r = m.rank();
  std::vector<int> lo(L + 1), hi(L + 1), need(L + 2, 0);
  for (int t = 0; t <= L; ++t) {
    lo[t] = m.p.prefix_n(t);
    hi[t] = m.q.prefix_n(t);
  }
  need[L] = lo[L];
  for (int t = L - 1; t >= 0; --t) need[t] = std::max(lo[t], need[t + 1] - 1);
  Bands bd;
  bd.lo2.resize(L + 1);
  bd.hi.resize(L + 1);
  for (int t = 0; t <= L; ++t) {
    bd.lo2[t] = std::max(need[t], r - (L - t));
    bd.hi[t] = hi[t];
  }
  return bd;
}

bool bands_overlap(int lo1, int hi1, int lo2, int hi2) {
  return std::max(lo1, lo2) <= std::min(hi1, hi2);
}

}  // namespace

bool lpm_is_loop(const LatticePathMatroid& m, Element e) {
  Bands bd = bands(m);
  // no k with (e,k) feasible and (e+1,k+1) feasible
  return !bands_overlap(bd.lo2[e], bd.hi[e], bd.lo2[e + 1] - 1, bd.hi[e + 1] - 1);
}

bool lpm_is_isthmus(const LatticePathMatroid& m, Element e) {
  Bands bd = bands(m);
  return !bands_overlap(bd.lo2[e], bd.hi[e], bd.lo2[e + 1], bd.hi[e + 1]);
}

namespace {

std::string erase_at(const std::string& s, int pos) {
  std::string out = s;
  out.erase(out.begin() + pos);
  return out;
}

int first_char_at_or_after(const std::string& s, int pos, char c) {
  for (int i = pos; i < static_cast<int>(s.size()); ++i)
    if (s[i] == c) return i;
  return -1;
}

int last_char_at_or_before(const std::string& s, int pos, char c) {
  for (int i = std::min<int>(pos, static_cast<int>(s.size()) - 1); i >= 0; --i)
    if (s[i] == c) return i;
  return -1;
}

}  // namespace

LatticePathMatroid lpm_delete(const LatticePathMatroid& m, Element e) {
  if (e < 0 || e >= m.ground()) throw Error("ElementOutOfRange", "bad element");
  if (lpm_is_loop(m, e) || lpm_is_isthmus(m, e))
    throw Error("LoopOrIsthmus", "minor rules need a free element");
  int qe = first_char_at_or_after(m.q.word, e, 'E');
  int pe = last_char_at_or_before(m.p.word, e, 'E');
  if (qe < 0 || pe < 0) throw Error("RuleUndefined", "no E step available for deletion rule");
  return LatticePathMatroid::make(StepWord{erase_at(m.p.word, pe)},
                                  StepWord{erase_at(m.q.word, qe)});
}

LatticePathMatroid lpm_contract(const LatticePathMatroid& m, Element e) {
  if (e < 0 || e >= m.ground()) throw Error("ElementOutOfRange", "bad element");
  if (lpm_is_loop(m, e) || lpm_is_isthmus(m, e))
    throw Error("LoopOrIsthmus", "minor rules need a free element");
  int qn = last_char_at_or_before(m.q.word, e, 'N');
  int pn = first_char_at_or_after(m.p.word, e, 'N');
  if (qn < 0 || pn < 0) throw Error("RuleUndefined", "no N step available for contraction rule");
  return LatticePathMatroid::make(StepWord{erase_at(m.p.word, pn)},
                                  StepWord{erase_at(m.q.word, qn)});
}

LatticePathMatroid GenCatalan::matroid() const {
  std::string p(corank(), 'E');
  p += std::string(rank(), 'N');
  return LatticePathMatroid::make(StepWord{p}, q);
}

GenCatalan GenCatalan::make(StepWord q) {
  GenCatalan m{std::move(q)};
  m.matroid();  // validates
  return m;
}

GenCatalan catalan_matroid(int k) {
  if (k < 1) throw Error("BadParams", "catalan matroid needs k >= 1");
  std::string q;
  for (int i = 0; i < k; ++i) q += "NE";
  return GenCatalan::make(StepWord{q});
}

GenCatalan gencat_delete(const GenCatalan& m, Element e) {
  LatticePathMatroid minor = lpm_delete(m.matroid(), e);
  return GenCatalan::make(minor.q);
}

GenCatalan gencat_contract(const GenCatalan& m, Element e) {
  LatticePathMatroid minor = lpm_contract(m.matroid(), e);
  return GenCatalan::make(minor.q);
}

GenCatalan dualize(const GenCatalan& m) {
  std::string q = m.q.word;
  std::reverse(q.begin(), q.end());
  for (char& c : q) c = (c == 'N') ? 'E' : 'N';
  return GenCatalan::make(StepWord{q});
}

Basis dual_basis_of(const GenCatalan& primal, const Basis& b) {
  int L = primal.ground();
  Basis out;
  for (int i = 0; i < L; ++i)
    if (!basis_contains(b, i)) out.push_back(L - 1 - i);
  std::sort(out.begin(), out.end());
  return out;
}

StrippedGenCatalan gencat_strip(const GenCatalan& m) {
  const std::string& q = m.q.word;
  int L = m.ground();
  int first_n = 0;
  while (first_n < L && q[first_n] == 'E') ++first_n;
  int last_e = L - 1;
  while (last_e >= 0 && q[last_e] == 'N') --last_e;
  if (first_n > last_e) throw Error("TrivialMatroid", "no free elements after stripping");
  StrippedGenCatalan out;
  out.stripped = GenCatalan::make(StepWord{q.substr(first_n, last_e - first_n + 1)});
  out.old_to_new.assign(L, -1);
  for (int i = first_n; i <= last_e; ++i) out.old_to_new[i] = i - first_n;
  for (int i = last_e + 1; i < L; ++i) out.isthmuses.push_back(i);
  return out;
}

namespace {

void emit_catalan(const BasisFamily& family, const BasisGraph& bg, int b1, int b2,
                  const Basis& B4, const Basis& B3, std::vector<GoodCycle>& out) {
  int i4 = family.index_of(B4);
  int i3 = family.index_of(B3);
  if (i4 < 0 || i3 < 0)
    throw Error("TemplateNotBasis", "case template produced a non-basis");
  out.push_back(make_good_cycle(family, bg, b1, b2, i3, i4));
}

}  // namespace

std::vector<GoodCycle> good_cycles_catalan(const GenCatalan& m, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2) {
  if (m.corank() < m.rank() || m.rank() < 2)
    throw Error("InvalidExchange", "construction needs corank >= rank >= 2");
  if (m.q.word.front() != 'N' || m.q.word.back() != 'E')
    throw Error("LoopOrIsthmus", "matroid must be loop-free and isthmus-free");
  const Basis& B1 = family.bases[b1];
  const Basis& B2 = family.bases[b2];
  Element e = -1, g = -1;
  for (Element x : B1)
    if (!basis_contains(B2, x)) e = x;
  for (Element x : B2)
    if (!basis_contains(B1, x)) g = x;
  if (e < 0 || g < 0) throw Error("NotAnEdge", "bases are not adjacent");
  if (e >= g) throw Error("InvalidExchange", "requires word positions e < g");

  int L = m.ground();
  // common N positions: B1 - e; common E positions: outside B1 and B2.
  std::vector<Element> common_n, common_e;
  for (Element x : B1)
    if (x != e) common_n.push_back(x);
  for (int t = 0; t < L; ++t)
    if (!basis_contains(B1, t) && t != g) common_e.push_back(t);

  bool case1 = !common_n.empty() && common_n.front() < e;
  bool case2 = !common_e.empty() && common_e.back() > g;

  std::vector<GoodCycle> out;
  if (case1) {
    Element f = common_n.front();
    for (Element w : common_e)
      emit_catalan(family, bg, b1, b2, basis_minus_plus(B1, f, w), basis_minus_plus(B2, f, w),
                   out);
  }
  if (case2) {
    Element w = common_e.back();
    for (Element f : common_n)
      emit_catalan(family, bg, b1, b2, basis_minus_plus(B1, f, w), basis_minus_plus(B2, f, w),
                   out);
  }
  if (!case1 && !case2) {
    // e is the first N of B1 and g the last E; blocks of N's are handled by
    // the E step that terminates them.
    if (B1.front() != e) throw Error("InvalidExchange", "case 3 expects e first in B1");
    Element h = -1;  // penultimate E of B1
    {
      std::vector<Element> e_positions;
      for (int t = 0; t < L; ++t)
        if (!basis_contains(B1, t)) e_positions.push_back(t);
      if (e_positions.size() < 2 || e_positions.back() != g)
        throw Error("InvalidExchange", "case 3 expects g last E of B1 and m >= 2");
      h = e_positions[e_positions.size() - 2];
    }
    for (Element f : common_n) {
      int w = -1;
      for (int t = f + 1; t < L; ++t) {
        if (!basis_contains(B1, t)) {
          w = t;
          break;
        }
      }
      if (w >= 0 && w < g) {
        emit_catalan(family, bg, b1, b2, basis_minus_plus(B1, f, w), basis_minus_plus(B2, f, w),
                     out);
      } else {
        // terminating E is g itself (type II) or absent (trailing block, III)
        emit_catalan(family, bg, b1, b2, basis_minus_plus(B1, f, g), basis_minus_plus(B2, f, h),
                     out);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GencatDual make_gencat_dual(const GenCatalan& m) {
  GencatDual d;
  d.m = dualize(m);
  d.family = enumerate_bases_paths(d.m.matroid());
  d.bg = build_basis_graph(d.family);
  return d;
}

std::vector<GoodCycle> good_cycles_gencat_min(const GenCatalan& m, const BasisFamily& family,
                                              const BasisGraph& bg, int b1, int b2,
                                              const GencatDual* dual) {
  if (!bg.has_edge(b1, b2)) throw Error("NotAnEdge", "b1b2 is not a basis-graph edge");
  const Basis& B1 = family.bases[b1];
  const Basis& B2 = family.bases[b2];
  Element e = -1, g = -1;
  for (Element x : B1)
    if (!basis_contains(B2, x)) e = x;
  for (Element x : B2)
    if (!basis_contains(B1, x)) g = x;
  int u = b1, v = b2;
  if (e > g) std::swap(u, v);  // orient so the exchanged-out position is smaller

  if (m.corank() >= m.rank()) return good_cycles_catalan(m, family, bg, u, v);

  // Dual route: complement-reverse everything, construct there, map back.
  GencatDual local;
  if (!dual) {
    local = make_gencat_dual(m);
    dual = &local;
  }
  const GenCatalan& dm = dual->m;
  const BasisFamily& dfam = dual->family;
  const BasisGraph& dbg = dual->bg;
  int du = dfam.index_of(dual_basis_of(m, family.bases[u]));
  int dv = dfam.index_of(dual_basis_of(m, family.bases[v]));
  if (du < 0 || dv < 0) throw Error("DualMismatch", "dual basis not found");
  auto dual_cycles = good_cycles_catalan(dm, dfam, dbg, du, dv);
  std::vector<GoodCycle> out;
  out.reserve(dual_cycles.size());
  for (const GoodCycle& dc : dual_cycles) {
    int p3 = family.index_of(dual_basis_of(dm, dfam.bases[dc.b3]));
    int p4 = family.index_of(dual_basis_of(dm, dfam.bases[dc.b4]));
    if (p3 < 0 || p4 < 0) throw Error("DualMismatch", "mapped-back basis not found");
    // Mapped cycles satisfy the e-pattern for the reversed orientation (v,u).
    out.push_back(make_good_cycle(family, bg, v, u, p4, p3));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bghc
