#include "polypos/campaign.hpp"

#include <json.hpp>
#include <stdexcept>

#include "polypos/catalog.hpp"

namespace polypos {

namespace {

using nlohmann::ordered_json;

std::string entry_triangle_label(const TriangleSpec& spec) {
  if (const auto* b = std::get_if<BuiltinRef>(&spec.family)) {
    std::string label = b->id;
    if (b->z) label += ";z=" + rat_to_string(*b->z);
    if (b->m) label += ";m=" + rat_to_string(*b->m);
    return label;
  }
  return family_tag(spec);
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

std::vector<CampaignEntry> parse_campaign_manifest(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("campaign manifest: invalid JSON: ") + e.what());
  }
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw std::invalid_argument("campaign manifest: missing \"entries\" array");
  std::vector<CampaignEntry> entries;
  for (const auto& item : doc["entries"]) {
    CampaignEntry entry;
    if (item.contains("builtin")) {
      std::optional<Rat> z, m;
      if (item.contains("z")) z = rat_from_string(item["z"].get<std::string>());
      if (item.contains("m")) m = rat_from_string(item["m"].get<std::string>());
      entry.spec = builtin_spec(item["builtin"].get<std::string>(), z, m);
    } else if (item.contains("spec")) {
      entry.spec = triangle_spec_from_json(item["spec"].dump());
    } else {
      throw std::invalid_argument(
          "campaign manifest: entry needs \"builtin\" or \"spec\"");
    }
    entry.seed = item.at("seed").get<std::string>();
    entry.mode = preservation_mode_from_string(item.at("mode").get<std::string>());
    entry.n_max = item.at("n_max").get<int>();
    if (entry.n_max < 0)
      throw std::invalid_argument("campaign manifest: n_max must be >= 0");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<CampaignResult> run_campaign(const std::vector<CampaignEntry>& entries) {
  std::vector<CampaignResult> results;
  results.reserve(entries.size());
  for (const CampaignEntry& entry : entries) {
    Triangle tri = Triangle::generate(entry.spec, entry.n_max);
    SeedSequence seed = make_seed(entry.seed, entry.n_max);
    PropertyReport report = verify_preservation(tri, seed, entry.mode);
    results.push_back({entry, std::move(report)});
  }
  return results;
}

std::string campaign_reports_json(const std::vector<CampaignResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const CampaignResult& r : results) {
    ordered_json item;
    item["triangle"] = entry_triangle_label(r.entry.spec);
    item["seed"] = r.entry.seed;
    item["mode"] = preservation_mode_to_string(r.entry.mode);
    item["n_max"] = r.entry.n_max;
    item["report"] = ordered_json::parse(r.report.to_json());
    arr.push_back(std::move(item));
  }
  return arr.dump(2) + "\n";
}

std::string campaign_summary_csv(const std::vector<CampaignResult>& results) {
  std::string out = "index,triangle,seed,mode,n_max,verdict,witness\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const CampaignResult& r = results[i];
    std::string witness;
    for (const auto& [k, v] : r.report.witness) {
      if (!witness.empty()) witness += "; ";
      witness += k + "=" + v;
    }
    out += std::to_string(i) + "," + entry_triangle_label(r.entry.spec) + "," +
           r.entry.seed + "," + preservation_mode_to_string(r.entry.mode) + "," +
           std::to_string(r.entry.n_max) + "," + verdict_to_string(r.report.verdict) +
           "," + csv_quote(witness) + "\n";
  }
  return out;
}

}  // namespace polypos
