#include "gfe/case_report.hpp"

#include <algorithm>

namespace gfe {

Check& CaseReport::check(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
  return checks.back();
}

bool CaseReport::all_checks_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void CaseReport::absorb(const CaseReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + ": " + c.name, c.passed, c.detail});
  for (const auto& s : other.sieves) sieves.push_back(s);
  for (const auto& d : other.discrepancies) discrepancies.push_back(prefix + ": " + d);
  for (const auto& n : other.notes) notes.push_back(prefix + ": " + n);
  for (const auto& c : other.curves)
    if (std::find(curves.begin(), curves.end(), c) == curves.end()) curves.push_back(c);
}

nlohmann::json to_json(const CaseReport& r) {
  using nlohmann::json;
  json j;
  j["case"] = r.case_id;
  j["bound"] = r.bound ? json(r.bound->get_str()) : json(nullptr);
  j["solutions"] = json::array();
  for (const auto& s : r.solutions)
    j["solutions"].push_back({s.s.get_str(), s.t.get_str(), s.u.get_str()});
  j["checks"] = json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["sieves"] = json::array();
  for (const auto& s : r.sieves) {
    json survivors = json::array();
    for (const auto& t : s.survivors) survivors.push_back(t);
    j["sieves"].push_back({{"label", s.label},
                           {"modulus", s.modulus},
                           {"variables", s.variables},
                           {"survivors", survivors}});
  }
  j["curves"] = r.curves;
  j["discrepancies"] = r.discrepancies;
  j["notes"] = r.notes;
  j["ok"] = r.ok();
  return j;
}

std::string summary_line(const CaseReport& r) {
  std::size_t passed = std::count_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
  std::string s = r.case_id + ": " + (r.ok() ? "OK" : "FAIL") + " (" + std::to_string(passed) + "/" +
                  std::to_string(r.checks.size()) + " checks";
  if (r.bound) s += ", bound " + r.bound->get_str();
  s += ", " + std::to_string(r.solutions.size()) + " solutions";
  if (!r.discrepancies.empty()) s += ", " + std::to_string(r.discrepancies.size()) + " DISCREPANCIES";
  return s + ")";
}

}  // namespace gfe
