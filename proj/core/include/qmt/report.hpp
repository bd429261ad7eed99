#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmt {

/// Verdict of one named check. Witnesses are human-readable descriptions of
/// concrete counterexamples; they are sorted before rendering so reports are
/// reproducible regardless of evaluation order.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::string note;

  void fail(std::string witness);
};

struct Report {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  int failed_count() const;

  /// Line-oriented key/value rendering; byte-stable for fixed inputs and
  /// seed (no timing or environment data).
  std::string render_text() const;
  /// JSON rendering with stable key order.
  std::string render_json() const;
};

}  // namespace qmt
