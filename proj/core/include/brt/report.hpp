#pragma once

#include <string>
#include <vector>

namespace brt {

struct RelatorCheck {
  std::string label;
  std::string word;
  bool holds = false;
};

/// Outcome of evaluating a list of relators in some model.
struct VerificationReport {
  std::string subject;
  std::vector<RelatorCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  /// One "PASS label: word" / "FAIL label: word" line per check, then a summary line.
  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};

}  // namespace brt
