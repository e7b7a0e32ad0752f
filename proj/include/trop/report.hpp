#pragma once

/// Check reports: every verification routine returns one of these instead of
/// asserting, so the CLI can serialize outcomes and tests can inspect
/// witnesses.

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace trop {

struct Violation {
  std::string rule;     // which axiom / law failed
  std::string witness;  // human-readable counterexample
};

struct Report {
  std::string subject;  // what was checked ("retraction-congruences", ...)
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // extra facts worth surfacing (counts, flags)

  bool pass() const { return violations.empty(); }

  void fail(std::string rule, std::string witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }

  void note(std::string n) { notes.push_back(std::move(n)); }

  void require(bool ok, const std::string& rule, const std::string& witness) {
    if (!ok) fail(rule, witness);
  }

  void absorb(const Report& r) {
    for (const auto& v : r.violations) violations.push_back(v);
    for (const auto& n : r.notes) notes.push_back(n);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["pass"] = pass();
    j["witnesses"] = nlohmann::json::array();
    for (const auto& v : violations) j["witnesses"].push_back({{"rule", v.rule}, {"witness", v.witness}});
    j["notes"] = notes;
    return j;
  }
};

}  // namespace trop
