#pragma once

#include <map>
#include <string>

namespace polypos {

enum class Verdict { Pass, Fail, InputFail };

std::string verdict_to_string(Verdict v);

// Outcome of one property check. A FAIL always carries enough witness data to
// re-check the violation by hand; `range` records what was actually examined,
// since every verdict here is finite-instance evidence, never a proof.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::Pass;
  std::map<std::string, std::string> witness;
  std::map<std::string, std::string> range;

  bool passed() const { return verdict == Verdict::Pass; }

  // {"schema": 1, "property": ..., "verdict": ..., "witness": {...},
  //  "range": {...}, "evidence": "finite-instance"}
  std::string to_json() const;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

PropertyReport pass_report(std::string property,
                           std::map<std::string, std::string> range = {});
PropertyReport fail_report(std::string property,
                           std::map<std::string, std::string> witness,
                           std::map<std::string, std::string> range = {});

}  // namespace polypos
