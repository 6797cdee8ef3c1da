#pragma once

#include <map>
#include <memory>
#include <string>

#include "bghc/basis.hpp"
#include "bghc/hamilton.hpp"
#include "bghc/latticepath.hpp"
#include "bghc/multigraph.hpp"
#include "bghc/uniform.hpp"

namespace bghc {

class FamilyInstance;

// A minor together with the vertex correspondence into it.
struct MinorLink {
  std::shared_ptr<const FamilyInstance> child;
  std::vector<int> parent_to_child;  // -1 for vertices on the other side
};

// Family-specific handle the witness recursion works through: bases, basis
// graph, template good cycles, and the two minors of a split element.
class FamilyInstance {
 public:
  enum class Structure { General, CompleteBG, PrismBG };

  virtual ~FamilyInstance() = default;

  const BasisFamily& family() const { return family_; }
  const BasisGraph& graph() const { return graph_; }

  virtual std::string describe() const = 0;
  virtual std::vector<GoodCycle> template_good_cycles(int b1, int b2) const = 0;
  virtual MinorLink contract_minor(Element e) const = 0;  // bases containing e
  virtual MinorLink delete_minor(Element e) const = 0;    // bases avoiding e
  virtual Structure structure() const { return Structure::General; }
  // Product coordinates when structure() == PrismBG.
  virtual std::vector<std::pair<int, int>> prism_coords() const;
  // Families whose recursion bottoms out regardless of basis count.
  virtual bool force_exhaustive() const { return false; }

 protected:
  void init(BasisFamily family) {
    family_ = std::move(family);
    graph_ = build_basis_graph(family_);
  }

  BasisFamily family_;
  BasisGraph graph_;
};

class GraphicInstance : public FamilyInstance {
 public:
  explicit GraphicInstance(Multigraph g);
  const Multigraph& multigraph() const { return g_; }

  std::string describe() const override;
  std::vector<GoodCycle> template_good_cycles(int b1, int b2) const override;
  MinorLink contract_minor(Element e) const override;
  MinorLink delete_minor(Element e) const override;
  Structure structure() const override;
  std::vector<std::pair<int, int>> prism_coords() const override;
  bool force_exhaustive() const override { return g_.n <= 3; }

 private:
  Multigraph g_;
  mutable std::map<Element, MinorLink> contract_cache_, delete_cache_;
};

class CatalanInstance : public FamilyInstance {
 public:
  explicit CatalanInstance(GenCatalan m);  // strips loops/isthmuses
  const GenCatalan& gencat() const { return m_; }

  std::string describe() const override;
  std::vector<GoodCycle> template_good_cycles(int b1, int b2) const override;
  MinorLink contract_minor(Element e) const override;
  MinorLink delete_minor(Element e) const override;

 private:
  GenCatalan m_;
  mutable std::map<Element, MinorLink> contract_cache_, delete_cache_;
  mutable std::unique_ptr<GencatDual> dual_cache_;
};

class UniformInstance : public FamilyInstance {
 public:
  explicit UniformInstance(UniformSpec spec);
  const UniformSpec& spec() const { return spec_; }

  std::string describe() const override;
  std::vector<GoodCycle> template_good_cycles(int b1, int b2) const override;
  MinorLink contract_minor(Element e) const override;
  MinorLink delete_minor(Element e) const override;
  Structure structure() const override;

 private:
  UniformSpec spec_;
  mutable std::map<Element, MinorLink> contract_cache_, delete_cache_;
};

struct WitnessPolicy {
  uint64_t target = 1;        // stop growing once this many distinct witnesses exist
  int exhaustive_cutoff = 12; // basis graphs this small are enumerated directly
  int max_rounds = 4;         // escalation rounds when gluing collides
  int depth = 0;
};

// Realizes the strategy inequality: for each good cycle of the edge, glue a
// contract-side witness through b1b4 with a delete-side cycle through b2b3
// (K_2 short-circuit when the delete side is a single edge). Deduplicates
// by edge set; collisions are counted, never assumed away.
WitnessSet witnesses_recursive(const FamilyInstance& inst, int b1, int b2,
                               const WitnessPolicy& policy);

}  // namespace bghc
