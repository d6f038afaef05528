#include "brt/report.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace brt {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const RelatorCheck& c) { return !c.holds; }));
}

std::string VerificationReport::to_text() const {
  std::string out;
  for (const auto& c : checks)
    out += std::string(c.holds ? "PASS " : "FAIL ") + c.label + ": " + c.word + "\n";
  out += subject + ": " + std::to_string(checks.size() - failures()) + "/" +
         std::to_string(checks.size()) + " relations hold; " + (passed() ? "VERIFIED" : "FAILED") +
         "\n";
  return out;
}

std::string VerificationReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["subject"] = subject;
  j["passed"] = passed();
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) arr.push_back({{"label", c.label}, {"word", c.word}, {"holds", c.holds}});
  j["checks"] = std::move(arr);
  return j.dump(indent);
}

}  // namespace brt
