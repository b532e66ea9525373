#include "polypos/report.hpp"

#include <json.hpp>

namespace polypos {

std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::InputFail: return "INPUT-FAIL";
  }
  return "FAIL";
}

std::string PropertyReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["property"] = property;
  j["verdict"] = verdict_to_string(verdict);
  j["witness"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : witness) j["witness"][k] = v;
  j["range"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : range) j["range"][k] = v;
  j["evidence"] = "finite-instance";
  return j.dump();
}

PropertyReport pass_report(std::string property,
                           std::map<std::string, std::string> range) {
  return PropertyReport{std::move(property), Verdict::Pass, {}, std::move(range)};
}

PropertyReport fail_report(std::string property,
                           std::map<std::string, std::string> witness,
                           std::map<std::string, std::string> range) {
  return PropertyReport{std::move(property), Verdict::Fail, std::move(witness),
                        std::move(range)};
}

}  // namespace polypos
