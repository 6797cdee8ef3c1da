#include <doctest.h>

#include "bghc/campaign.hpp"
#include "bghc/engine.hpp"
#include "bghc/io.hpp"
#include "bghc/uniform.hpp"

using namespace bghc;

TEST_CASE("family JSON round trip") {
  auto fam = uniform_bases(UniformSpec::make(2, 4));
  auto j = family_to_json(fam);
  CHECK(j["ground_size"] == 4);
  CHECK(j["rank"] == 2);
  auto back = family_from_json(j);
  CHECK(back.bases == fam.bases);
}

TEST_CASE("multigraph JSON round trip") {
  auto g = mg_k2_sum_cycle(4);
  auto back = multigraph_from_json(multigraph_to_json(g));
  CHECK(back.n == g.n);
  CHECK(back.m() == g.m());
  CHECK(canonical_key(back) == canonical_key(g));
}

TEST_CASE("witness set JSON round trip") {
  UniformInstance inst(UniformSpec::make(2, 4));
  WitnessPolicy policy;
  policy.target = 3;
  auto ws = witnesses_recursive(inst, 0, 1, policy);
  auto back = witness_set_from_json(witness_set_to_json(ws));
  CHECK(back.edge == ws.edge);
  CHECK(back.cycles == ws.cycles);
  validate_witness_set(inst.graph(), back);  // re-ingested sets re-validate
}

TEST_CASE("DOT export is deterministic and labeled") {
  auto fam = enumerate_spanning_trees(mg_cycle(3));
  auto bg = build_basis_graph(fam);
  auto dot1 = export_dot(fam, bg);
  auto dot2 = export_dot(fam, bg);
  CHECK(dot1 == dot2);
  CHECK(dot1.find("label=\"{0,1}\"") != std::string::npos);
  CHECK(dot1.find("v0 -- v1") != std::string::npos);
  auto hl = export_dot(fam, bg, {{0, 1}});
  CHECK(hl.find("color=red") != std::string::npos);
}

TEST_CASE("campaign smoke: uniform grid") {
  Campaign c;
  c.family = "uniform";
  c.uniform_grid = {{2, 4}};
  auto result = run_campaign(c);
  CHECK(result.pass);
  CHECK(result.records.size() == 12);  // octahedron edges
  for (const auto& r : result.records) {
    CHECK(r.status == "PASS");
    CHECK(r.good_count >= r.bound_good);
  }
  auto report = campaign_report(c, result);
  CHECK(report["pass"] == true);
  CHECK(report["records"].size() == 12);
  // identical reruns give identical reports
  auto report2 = campaign_report(c, run_campaign(c));
  CHECK(report.dump() == report2.dump());
}

TEST_CASE("campaign smoke: catalan k=2") {
  Campaign c;
  c.family = "catalan";
  c.k_max = 2;
  auto result = run_campaign(c);
  CHECK(result.pass);
  for (const auto& r : result.records) CHECK(r.hc_value >= 1);
}
