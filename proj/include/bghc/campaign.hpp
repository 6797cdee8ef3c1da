#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bghc/basis.hpp"

namespace bghc {

// One (instance, edge) verification row. Counts are exact unless hc_capped,
// in which case hc_value reached the threshold and stopped.
struct VerificationRecord {
  std::string instance;
  int edge_u = -1, edge_v = -1;
  uint64_t good_count = 0;
  uint64_t bound_good = 0;
  uint64_t hc_value = 0;
  bool hc_capped = false;
  std::string bound_hc;  // decimal; may exceed 64 bits
  uint64_t witness_count = 0;
  std::string status;  // PASS | FAIL | CAPPED-PASS
  std::string note;    // replayable instance payload on FAIL
};

struct Campaign {
  std::string family;  // graphic2 | graphicK | catalan | gencat | uniform
  int n_max = 5;
  int m_max = 8;
  int k_max = 3;
  int gencat_len_max = 8;  // gencat sweep: max |Q|
  std::vector<std::pair<int, int>> uniform_grid{{2, 4}, {2, 5}, {3, 5}};
  std::optional<uint64_t> cap;  // override the bound-derived cap
  uint64_t seed = 0;            // recorded; enumeration is exhaustive
  bool witnesses = true;
};

struct CampaignResult {
  std::vector<VerificationRecord> records;
  bool pass = true;
};

CampaignResult run_campaign(const Campaign& c);

nlohmann::json record_to_json(const VerificationRecord& r);
nlohmann::json campaign_report(const Campaign& c, const CampaignResult& result);

}  // namespace bghc
