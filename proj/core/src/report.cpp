#include "qmt/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace qmt {

void CheckResult::fail(std::string witness) {
  pass = false;
  // Cap stored witnesses; one is enough to act on, a few help debugging.
  if (witnesses.size() < 8) witnesses.push_back(std::move(witness));
}

bool Report::all_pass() const { return failed_count() == 0; }

int Report::failed_count() const {
  int n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string Report::render_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "version: " << version << "\n";
  os << "seed: " << seed << "\n";
  for (const auto& c : checks) {
    os << "check: " << c.name << " " << (c.pass ? "pass" : "FAIL") << "\n";
    std::vector<std::string> w = c.witnesses;
    std::sort(w.begin(), w.end());
    for (const auto& x : w) os << "  witness: " << x << "\n";
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
  }
  os << "summary: " << (checks.size() - failed_count()) << "/" << checks.size()
     << " checks passed\n";
  return os.str();
}

std::string Report::render_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version;
  j["seed"] = seed;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    std::vector<std::string> w = c.witnesses;
    std::sort(w.begin(), w.end());
    jc["witnesses"] = w;
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(std::move(jc));
  }
  j["passed"] = static_cast<int>(checks.size()) - failed_count();
  j["total"] = checks.size();
  return j.dump(2) + "\n";
}

}  // namespace qmt
