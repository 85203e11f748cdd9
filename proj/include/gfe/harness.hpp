#pragma once

/**
 * Orchestration: run configuration, the end-to-end search for
 * x^2 + y^3 = z^15, the identity suite, curve inventories, descent covers,
 * and the versioned line-delimited report.
 */

#include "gfe/case_report.hpp"
#include "gfe/curve_model.hpp"
#include "gfe/exact_int.hpp"
#include "gfe/parametrization.hpp"

#include <json.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gfe {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  Int y_bound = 100000;
  Int z_bound = 7;
  Int st_bound = 1000;
  Int height_bound = 1000;
  std::vector<Int> sieve_primes{2, 3, 5, 7, 11, 13};
  unsigned workers = 1;
  std::string output_path;  // empty: standard output

  /// Throws std::invalid_argument if a bound is < 1, workers == 0, or a
  /// sieve prime is not prime.
  void validate() const;
};

/// Keys as in to_json(RunConfig); integers may be numbers or decimal
/// strings. Unknown keys throw std::invalid_argument.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});
nlohmann::json to_json(const RunConfig& cfg);

/// The published list: (+-1, -1, 0), (+-1, 0, 1), (0, 1, 1), (0, -1, -1), (+-3, -2, 1).
std::vector<SolutionTriple> known_solutions();
std::vector<SolutionTriple> known_in_window(const Int& y_bound, const Int& z_bound);

/// Every primitive (x, y, z) with |y| <= y_bound, |z| <= z_bound, sorted.
/// Both bounds must fit the machine search (|y| <= 10^9, |z| <= 10).
std::vector<SolutionTriple> primitive_solutions(const Int& y_bound, const Int& z_bound,
                                                unsigned workers = 1);

/// The primitive solutions of the main equation that a solution (s, t, u) of
/// u^5 = f_i(s, t) yields through the parametrization of f_i (both signs of x).
std::vector<SolutionTriple> lift_case_solution(int i, const StuSolution& stu);

struct CurveInventory {
  std::string id;
  Int height;
  std::vector<CurvePoint> points;
  std::optional<std::vector<CurvePoint>> expected;  // published list, if any
  bool consistent() const { return !expected || *expected == points; }
};

/// The published rational points of a catalogued curve, when the text lists them.
std::optional<std::vector<CurvePoint>> published_points(const std::string& id);

CurveInventory curve_inventory(const std::string& id, const Int& height, unsigned workers = 1);

/// Formal identities and structural curve facts, including Mumford divisors
/// and the two quadratic points.
CaseReport verify_identities();

/// Partial descent on a catalogued curve; for C3.1, C3.0, C6.0, C6.1 the
/// surviving covers are compared with the published ones.
CaseReport covers_report(const std::string& id, std::span<const Int> primes);

/// Local solubility of a catalogued curve at p, recorded as an observation.
CaseReport local_report(const std::string& id, const Int& p);

struct Timing {
  std::string stage;
  double seconds = 0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<SolutionTriple> found_solutions;  // found by the end-to-end search
  std::vector<CaseReport> cases;
  std::vector<CurveInventory> inventories;
  std::vector<Timing> timings;

  bool ok() const;
  std::vector<std::string> discrepancies() const;
};

/// The search of primitive_solutions() compared with the published list in
/// the window; the "end-to-end" case report carries the verdict.
VerificationReport end_to_end_search(const RunConfig& cfg);

/// Identity suite, case 4, cases 1, 2, 3, 5, 6, the case-6 arguments, descent
/// covers, curve inventories, local observations and the end-to-end search,
/// cross-checked against each other.
VerificationReport run_all(const RunConfig& cfg);

/// One JSON object per line: header, cases, inventories, solutions, timings, footer.
std::vector<nlohmann::json> report_records(const VerificationReport& report);
std::string report_summary(const VerificationReport& report);
/// 0 when ok(), 1 otherwise.
int exit_status(const VerificationReport& report);

nlohmann::json to_json(const CurveInventory& inv);
nlohmann::json to_json(const SolutionTriple& t);

}  // namespace gfe
