#pragma once

#include <vector>

#include "bghc/basis.hpp"
#include "bghc/multigraph.hpp"

namespace bghc {

// Good cycles in C_e(f) from the four template shapes: given B2 = B1 - e + g
// and a tree edge f in B1 - e,
//   f not in C(g,B1):  B4 = B1-f+w, B3 = B2-f+w        for w in E[XuY,Z]-f
//   f in C(g,B1):      B4 = B1-f+l, B3 = B2-f+l        for l in E[Y,Z]-f
//                      B4 = B1-f+g, B3 = B2-f+l        (second shape per l)
//                      B4 = B1-f+g, B3 = B2-f+h        for h in E[X,Y]-e
//                      B4 = B1-f+j, B3 = B2-g+j        for j in E[X,Z]-g
// Every produced cycle is validated against the GoodCycle invariants.
std::vector<GoodCycle> good_cycles_at(const Multigraph& g, const BasisFamily& family,
                                      const BasisGraph& bg, int b1, int b2, Element f);

// Union of good_cycles_at over all f in B1 - e (disjoint by construction).
std::vector<GoodCycle> good_cycles_graphic(const Multigraph& g, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2);

}  // namespace bghc
