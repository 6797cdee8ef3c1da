#include "bghc/uniform.hpp"

#include <algorithm>
#include <functional>

namespace bghc {

UniformSpec UniformSpec::make(int r, int n) {
  if (!(n > r && r >= 1)) throw Error("BadParams", "uniform matroid needs n > r >= 1");
  return UniformSpec{r, n};
}

BasisFamily uniform_bases(const UniformSpec& spec) {
  std::vector<Basis> bases;
  Basis cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == spec.r) {
      bases.push_back(cur);
      return;
    }
    int remaining = spec.r - static_cast<int>(cur.size());
    for (int x = start; x + remaining <= spec.n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return BasisFamily::make(spec.n, std::move(bases));
}

std::vector<GoodCycle> good_cycles_uniform(const UniformSpec& spec, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2) {
  if (!bg.has_edge(b1, b2)) throw Error("NotAnEdge", "b1b2 is not a basis-graph edge");
  const Basis& B1 = family.bases[b1];
  const Basis& B2 = family.bases[b2];
  Element e = -1, g = -1;
  for (Element x : B1)
    if (!basis_contains(B2, x)) e = x;
  for (Element x : B2)
    if (!basis_contains(B1, x)) g = x;
  if (e < 0 || g < 0) throw Error("InvalidExchange", "bases are not adjacent");

  auto emit = [&](const Basis& B4, const Basis& B3, std::vector<GoodCycle>& out) {
    int i4 = family.index_of(B4);
    int i3 = family.index_of(B3);
    if (i4 < 0 || i3 < 0) throw Error("TemplateNotBasis", "uniform template failed");
    out.push_back(make_good_cycle(family, bg, b1, b2, i3, i4));
  };

  std::vector<GoodCycle> out;
  for (Element f : B1) {
    if (f == e) continue;
    for (Element w = 0; w < spec.n; ++w) {
      if (w == g || basis_contains(B1, w)) continue;
      emit(basis_minus_plus(B1, f, w), basis_minus_plus(B2, f, w), out);  // type A
      emit(basis_minus_plus(B1, f, g), basis_minus_plus(B2, f, w), out);  // type B
      emit(basis_minus_plus(B1, f, w), basis_minus_plus(B2, g, w), out);  // type C
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace bghc
