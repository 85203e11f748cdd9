#pragma once

/**
 * Structured outcome of one verification argument.
 *
 * Serialized as a JSON object with the stable field names
 * `case`, `bound`, `solutions`, `checks`, `sieves`, `curves`,
 * `discrepancies`, `notes`, `ok`. All integers are decimal strings.
 */

#include "gfe/exact_int.hpp"
#include "gfe/residue_sieve.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gfe {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SieveArtifact {
  std::string label;
  std::int64_t modulus = 0;
  std::vector<std::string> variables;
  std::vector<ResidueTuple> survivors;
};

struct StuSolution {
  Int s, t, u;
  friend bool operator==(const StuSolution&, const StuSolution&) = default;
  friend bool operator<(const StuSolution& a, const StuSolution& b) {
    return std::tie(a.s, a.t, a.u) < std::tie(b.s, b.t, b.u);
  }
};

struct CaseReport {
  std::string case_id;
  std::optional<Int> bound;
  std::vector<Check> checks;
  std::vector<SieveArtifact> sieves;
  std::vector<StuSolution> solutions;
  std::vector<std::string> curves;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;

  Check& check(std::string name, bool passed, std::string detail = {});
  bool all_checks_passed() const;
  bool ok() const { return all_checks_passed() && discrepancies.empty(); }
  void absorb(const CaseReport& other, const std::string& prefix);
};

nlohmann::json to_json(const CaseReport& report);
std::string summary_line(const CaseReport& report);

}  // namespace gfe
