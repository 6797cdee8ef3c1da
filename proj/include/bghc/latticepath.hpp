#pragma once

#include <string>
#include <vector>

#include "bghc/basis.hpp"

namespace bghc {

// A monotone lattice path as a word over {N,E}; step positions are the
// 0-based element ids (classical treatments number steps from 1).
struct StepWord {
  std::string word;  // characters 'N' and 'E'

  int length() const { return static_cast<int>(word.size()); }
  int n_count() const;
  int e_count() const { return length() - n_count(); }
  // #N among the first t steps.
  int prefix_n(int t) const;

  static StepWord parse(const std::string& s);  // validates alphabet
};

StepWord word_from_n_positions(int length, const std::vector<int>& n_positions);
std::vector<int> n_positions(const StepWord& w);

// M[P,Q]: bases are the N-step sets of monotone paths between P and Q.
struct LatticePathMatroid {
  StepWord p, q;  // lower and upper bounding paths

  int rank() const { return q.n_count(); }
  int corank() const { return q.e_count(); }
  int ground() const { return q.length(); }

  // Validates equal lengths/step counts and P never above Q.
  static LatticePathMatroid make(StepWord p, StepWord q);

  bool admits(const Basis& n_set) const;  // path stays between P and Q
};

// Intervals A_i = [a_i, b_i]: positions (0-based) of the i-th N of Q and P.
std::vector<std::pair<int, int>> standard_presentation(const LatticePathMatroid& m);

BasisFamily enumerate_bases_paths(const LatticePathMatroid& m);

bool lpm_is_loop(const LatticePathMatroid& m, Element e);
bool lpm_is_isthmus(const LatticePathMatroid& m, Element e);

// Minor path rules; the removed position drops out and later positions
// shift down by one (the position-shift bijection).
//   deletion:    Q loses its first E at or after e; P loses its last E at or before e
//   contraction: Q loses its last N at or before e; P loses its first N at or after e
// Throws LoopOrIsthmus.
LatticePathMatroid lpm_delete(const LatticePathMatroid& m, Element e);
LatticePathMatroid lpm_contract(const LatticePathMatroid& m, Element e);

// Generalized Catalan matroid M[Q]: P = E^m N^r implicitly.
struct GenCatalan {
  StepWord q;

  int rank() const { return q.n_count(); }
  int corank() const { return q.e_count(); }
  int ground() const { return q.length(); }
  LatticePathMatroid matroid() const;

  static GenCatalan make(StepWord q);
};

GenCatalan catalan_matroid(int k);  // Q = (NE)^k

GenCatalan gencat_delete(const GenCatalan& m, Element e);
GenCatalan gencat_contract(const GenCatalan& m, Element e);

// Dual of a generalized Catalan matroid: reverse the ground order and swap
// N <-> E in Q. Element i of the dual corresponds to element L-1-i of the
// primal, and a dual basis is the reversed complement of a primal basis.
GenCatalan dualize(const GenCatalan& m);
Basis dual_basis_of(const GenCatalan& primal, const Basis& b);  // primal basis -> dual basis

// Removes loops (positions before Q's first N) and isthmuses (positions
// after Q's last E): neither affects the basis graph.
struct StrippedGenCatalan {
  GenCatalan stripped;
  std::vector<int> old_to_new;   // -1 for dropped positions
  std::vector<Element> isthmuses;  // dropped positions every basis contained
};
StrippedGenCatalan gencat_strip(const GenCatalan& m);

// The three-case construction: requires m has neither loop nor isthmus,
// corank >= rank >= 2, and the edge oriented so B2 = B1 - e + g with e < g.
std::vector<GoodCycle> good_cycles_catalan(const GenCatalan& m, const BasisFamily& family,
                                           const BasisGraph& bg, int b1, int b2);

// Reusable dual-side context for repeated good-cycle queries.
struct GencatDual {
  GenCatalan m;
  BasisFamily family;
  BasisGraph bg;
};
GencatDual make_gencat_dual(const GenCatalan& m);

// min{r-1, m-1} wrapper: orients the edge (e < g), applies the construction
// directly when corank >= rank, otherwise through the dual and maps the
// cycles back through complementation. Returned cycles are good cycles of
// the undirected edge {b1,b2}; their own b1/b2 fields carry the orientation
// whose exchanged element satisfies the e-pattern. A prebuilt dual context
// avoids re-enumerating the dual on every call.
std::vector<GoodCycle> good_cycles_gencat_min(const GenCatalan& m, const BasisFamily& family,
                                              const BasisGraph& bg, int b1, int b2,
                                              const GencatDual* dual = nullptr);

}  // namespace bghc
