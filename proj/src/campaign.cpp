#include "bghc/campaign.hpp"

#include <algorithm>
#include <set>

#include "bghc/bounds.hpp"
#include "bghc/engine.hpp"
#include "bghc/graphic.hpp"
#include "bghc/hamilton.hpp"
#include "bghc/io.hpp"
#include "bghc/latticepath.hpp"
#include "bghc/multigraph.hpp"
#include "bghc/uniform.hpp"

namespace bghc {

namespace {

bool subset_of_bruteforce(const std::vector<GoodCycle>& templ, const std::vector<GoodCycle>& all) {
  for (const GoodCycle& gc : templ) {
    GoodCycle probe = gc;
    // brute-force enumeration is rooted at the same ordered pair
    bool found = std::binary_search(all.begin(), all.end(), probe);
    if (!found) return false;
  }
  return true;
}

// Verified count through an edge: budgeted search first, then subset DP,
// then a constructive witness certificate (capped at the bound).
HcCount count_with_policy(const FamilyInstance& inst, int u, int v, uint64_t bound_cap) {
  const BasisGraph& bg = inst.graph();
  if (bg.num_vertices <= 14) return {count_hc_through_edge_dp(bg, u, v), false};
  auto c = count_hc_budgeted(bg, u, v, bound_cap, 200000);
  if (c) return *c;
  if (bg.num_vertices <= 20) return {count_hc_through_edge_dp(bg, u, v), false};
  WitnessPolicy policy;
  policy.target = bound_cap;
  WitnessSet ws = witnesses_recursive(inst, u, v, policy);
  validate_witness_set(bg, ws);
  return {std::min<uint64_t>(ws.size(), bound_cap), true};
}

std::string status_of(bool fail, bool capped) {
  if (fail) return "FAIL";
  return capped ? "CAPPED-PASS" : "PASS";
}

void run_graphic_family(const Campaign& c, bool two_conn_track, CampaignResult& out) {
  int min_conn = two_conn_track ? 2 : 3;
  auto pool = enumerate_multigraph_pool(3, c.n_max, c.m_max, min_conn);
  for (const Multigraph& g : pool) {
    GraphicInstance inst(g);
    const auto& fam = inst.family();
    const auto& bg = inst.graph();
    int n = g.n;
    int k = edge_connectivity(g);
    bool exceptional = recognize_exceptional(g) != ExceptionalKind::Neither;
    BigUint hc_bound_big =
        two_conn_track ? bound_2conn(n) : hc_lower(n, k).value;
    uint64_t cap = c.cap.value_or(hc_bound_big.fits_u64() ? hc_bound_big.as_u64() : UINT64_MAX);
    uint64_t bound_good = 0;
    if (two_conn_track) {
      bound_good = (n >= 4 && !exceptional) ? 2 : 0;
    } else {
      bound_good = static_cast<uint64_t>(n - 2) * static_cast<uint64_t>(k - 1);
    }
    std::string desc = "graphic:n=" + std::to_string(n) + ",m=" + std::to_string(g.m()) +
                       ",k=" + std::to_string(k);
    for (const auto& [u, v] : bg.edges()) {
      VerificationRecord rec;
      rec.instance = desc;
      rec.edge_u = u;
      rec.edge_v = v;
      rec.bound_good = bound_good;
      rec.bound_hc = hc_bound_big.str();
      auto brute = good_cycles_bruteforce(fam, bg, u, v);
      bool sound = true;
      if (exceptional) {
        rec.good_count = brute.size();
      } else {
        auto templ = good_cycles_graphic(g, fam, bg, u, v);
        rec.good_count = templ.size();
        sound = subset_of_bruteforce(templ, brute);
      }
      HcCount hc = count_with_policy(inst, u, v, cap);
      rec.hc_value = hc.value;
      rec.hc_capped = hc.capped;
      bool hc_ok = hc.capped ? hc.value >= cap
                             : BigUint(hc.value) >= hc_bound_big;
      if (c.witnesses) {
        WitnessPolicy policy;
        policy.target = hc_bound_big.fits_u64() ? hc_bound_big.as_u64() : UINT64_MAX;
        WitnessSet ws = witnesses_recursive(inst, u, v, policy);
        validate_witness_set(bg, ws);
        rec.witness_count = ws.size();
      }
      bool fail = !sound || !hc_ok || rec.good_count < rec.bound_good ||
                  (c.witnesses && BigUint(rec.witness_count) < hc_bound_big);
      rec.status = status_of(fail, hc.capped);
      if (fail) rec.note = multigraph_to_json(g).dump();
      out.pass = out.pass && !fail;
      out.records.push_back(std::move(rec));
    }
  }
}

void run_catalan_family(const Campaign& c, CampaignResult& out) {
  for (int k = 2; k <= c.k_max; ++k) {
    CatalanInstance inst(catalan_matroid(k));
    const auto& fam = inst.family();
    const auto& bg = inst.graph();
    BigUint bound_big = catalan_lower(k).value;
    uint64_t cap = c.cap.value_or(bound_big.fits_u64() ? bound_big.as_u64() : UINT64_MAX);
    uint64_t bound_good = static_cast<uint64_t>(k - 1);
    std::string desc = "catalan:k=" + std::to_string(k);
    for (const auto& [u, v] : bg.edges()) {
      VerificationRecord rec;
      rec.instance = desc;
      rec.edge_u = u;
      rec.edge_v = v;
      rec.bound_good = bound_good;
      rec.bound_hc = bound_big.str();
      auto templ = inst.template_good_cycles(u, v);
      rec.good_count = templ.size();
      // template cycles may be rooted at either orientation of {u,v}
      auto brute_uv = good_cycles_bruteforce(fam, bg, u, v);
      auto brute_vu = good_cycles_bruteforce(fam, bg, v, u);
      bool sound = true;
      for (const GoodCycle& gc : templ) {
        const auto& pool = (gc.b1 == u) ? brute_uv : brute_vu;
        if (!std::binary_search(pool.begin(), pool.end(), gc)) sound = false;
      }
      HcCount hc = count_with_policy(inst, u, v, cap);
      rec.hc_value = hc.value;
      rec.hc_capped = hc.capped;
      bool hc_ok = hc.capped ? hc.value >= cap : BigUint(hc.value) >= bound_big;
      if (c.witnesses) {
        WitnessPolicy policy;
        policy.target = bound_big.fits_u64() ? bound_big.as_u64() : UINT64_MAX;
        WitnessSet ws = witnesses_recursive(inst, u, v, policy);
        validate_witness_set(bg, ws);
        rec.witness_count = ws.size();
      }
      bool fail = !sound || !hc_ok || rec.good_count < rec.bound_good ||
                  (c.witnesses && BigUint(rec.witness_count) < bound_big);
      rec.status = status_of(fail, hc.capped);
      out.pass = out.pass && !fail;
      out.records.push_back(std::move(rec));
    }
  }
}

// Exhaustive sweep of loop/isthmus-free generalized Catalan matroids up to
// a ground-size limit: min{r-1, m-1} good cycles per edge with oracle
// soundness, and the edge-Hamiltonicity baseline HC >= 1.
void run_gencat_family(const Campaign& c, CampaignResult& out) {
  for (int len = 2; len <= c.gencat_len_max; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string q(len, 'E');
      for (int i = 0; i < len; ++i)
        if (mask & (1 << i)) q[i] = 'N';
      if (q.front() != 'N' || q.back() != 'E') continue;
      GenCatalan m = GenCatalan::make(StepWord::parse(q));
      if (m.rank() < 2 || m.corank() < 2) continue;
      CatalanInstance inst(m);
      if (inst.family().size() > 64) continue;
      const auto& fam = inst.family();
      const auto& bg = inst.graph();
      uint64_t bound_good = std::min(m.rank(), m.corank()) - 1;
      std::string desc = "gencat:Q=" + q;
      for (const auto& [u, v] : bg.edges()) {
        VerificationRecord rec;
        rec.instance = desc;
        rec.edge_u = u;
        rec.edge_v = v;
        rec.bound_good = bound_good;
        rec.bound_hc = "1";
        auto templ = inst.template_good_cycles(u, v);
        rec.good_count = templ.size();
        auto brute_uv = good_cycles_bruteforce(fam, bg, u, v);
        auto brute_vu = good_cycles_bruteforce(fam, bg, v, u);
        bool sound = true;
        for (const GoodCycle& gc : templ) {
          const auto& pool = (gc.b1 == u) ? brute_uv : brute_vu;
          if (!std::binary_search(pool.begin(), pool.end(), gc)) sound = false;
        }
        HcCount hc = count_with_policy(inst, u, v, c.cap.value_or(1));
        rec.hc_value = hc.value;
        rec.hc_capped = hc.capped;
        bool fail = !sound || hc.value < 1 || rec.good_count < rec.bound_good;
        rec.status = status_of(fail, hc.capped);
        out.pass = out.pass && !fail;
        out.records.push_back(std::move(rec));
      }
    }
  }
}

void run_uniform_family(const Campaign& c, CampaignResult& out) {
  for (const auto& [r, n] : c.uniform_grid) {
    UniformInstance inst(UniformSpec::make(r, n));
    const auto& fam = inst.family();
    const auto& bg = inst.graph();
    BigUint bound_big = uniform_lower(r, n).value;
    uint64_t cap = c.cap.value_or(bound_big.fits_u64() ? bound_big.as_u64() : UINT64_MAX);
    uint64_t bound_good = uniform_good_cycle_bound(r, n);
    std::string desc = "uniform:r=" + std::to_string(r) + ",n=" + std::to_string(n);
    for (const auto& [u, v] : bg.edges()) {
      VerificationRecord rec;
      rec.instance = desc;
      rec.edge_u = u;
      rec.edge_v = v;
      rec.bound_good = bound_good;
      rec.bound_hc = bound_big.str();
      auto templ = good_cycles_uniform(inst.spec(), fam, bg, u, v);
      rec.good_count = templ.size();
      auto brute = good_cycles_bruteforce(fam, bg, u, v);
      bool sound = subset_of_bruteforce(templ, brute);
      HcCount hc = count_with_policy(inst, u, v, cap);
      rec.hc_value = hc.value;
      rec.hc_capped = hc.capped;
      bool hc_ok = hc.capped ? hc.value >= cap : BigUint(hc.value) >= bound_big;
      if (c.witnesses) {
        WitnessPolicy policy;
        policy.target = bound_big.fits_u64() ? bound_big.as_u64() : UINT64_MAX;
        WitnessSet ws = witnesses_recursive(inst, u, v, policy);
        validate_witness_set(bg, ws);
        rec.witness_count = ws.size();
      }
      bool fail = !sound || !hc_ok || rec.good_count < rec.bound_good ||
                  (c.witnesses && BigUint(rec.witness_count) < bound_big);
      rec.status = status_of(fail, hc.capped);
      out.pass = out.pass && !fail;
      out.records.push_back(std::move(rec));
    }
  }
}

}  // namespace

CampaignResult run_campaign(const Campaign& c) {
  CampaignResult out;
  if (c.family == "graphic2") {
    run_graphic_family(c, true, out);
  } else if (c.family == "graphicK") {
    run_graphic_family(c, false, out);
  } else if (c.family == "catalan") {
    run_catalan_family(c, out);
  } else if (c.family == "gencat") {
    run_gencat_family(c, out);
  } else if (c.family == "uniform") {
    run_uniform_family(c, out);
  } else {
    throw Error("BadParams", "unknown campaign family: " + c.family);
  }
  return out;
}

nlohmann::json record_to_json(const VerificationRecord& r) {
  return nlohmann::json{
      {"instance", r.instance}, {"edge", {r.edge_u, r.edge_v}},
      {"good_cycle_count", r.good_count}, {"bound_good", r.bound_good},
      {"hc_count", r.hc_value}, {"hc_capped", r.hc_capped},
      {"bound_hc", r.bound_hc}, {"witness_count", r.witness_count},
      {"status", r.status}, {"note", r.note}};
}

nlohmann::json campaign_report(const Campaign& c, const CampaignResult& result) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) records.push_back(record_to_json(r));
  return nlohmann::json{{"schema_version", 1},
                        {"family", c.family},
                        {"seed", c.seed},
                        {"pass", result.pass},
                        {"records", records}};
}

}  // namespace bghc
