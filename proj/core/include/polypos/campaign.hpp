#pragma once

#include <string>
#include <vector>

#include "polypos/report.hpp"
#include "polypos/transform.hpp"
#include "polypos/triangle.hpp"

namespace polypos {

struct CampaignEntry {
  TriangleSpec spec;
  std::string seed;
  PreservationMode mode = PreservationMode::StrongQ;
  int n_max = 0;
};

struct CampaignResult {
  CampaignEntry entry;
  PropertyReport report;
};

// Manifest format: {"entries": [{"builtin": "stirling2", "z": "1", "m": "1",
// "seed": "monomials", "mode": "strong-q", "n_max": 10}, {"spec": {...}, ...}]}
// where "spec" holds an inline triangle spec object.
std::vector<CampaignEntry> parse_campaign_manifest(const std::string& json_text);

std::vector<CampaignResult> run_campaign(const std::vector<CampaignEntry>& entries);

// One JSON array with an object per entry (triangle, seed, mode, n_max,
// report), and a CSV summary with one line per entry.
std::string campaign_reports_json(const std::vector<CampaignResult>& results);
std::string campaign_summary_csv(const std::vector<CampaignResult>& results);

}  // namespace polypos
