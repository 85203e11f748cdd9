#include "gfe/harness.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>

using namespace gfe;

namespace {

// x^2 + y^3 = z^15 by running over x instead of y; machine integers only.
std::vector<SolutionTriple> naive_window(long Y, long Z) {
  std::vector<SolutionTriple> out;
  for (long z = -Z; z <= Z; ++z) {
    long z15 = 1;
    for (int k = 0; k < 15; ++k) z15 *= z;
    for (long y = -Y; y <= Y; ++y) {
      const long rest = z15 - y * y * y;
      for (long x = 0; x * x <= rest; ++x) {
        if (x * x != rest) continue;
        if (std::gcd(x, y) != 1 || std::gcd(x, z) != 1 || std::gcd(y, z) != 1) continue;
        out.push_back({x, y, z});
        if (x != 0) out.push_back({-x, y, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SolutionTriple> printed_solutions() {
  std::vector<SolutionTriple> v{{1, -1, 0}, {-1, -1, 0}, {1, 0, 1}, {-1, 0, 1},
                                {0, 1, 1},  {0, -1, -1}, {3, -2, 1}, {-3, -2, 1}};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("config parsing") {
  const RunConfig d;
  CHECK(d.y_bound == 100000);
  CHECK(d.z_bound == 7);
  const RunConfig c = config_from_json(
      nlohmann::json::parse(R"({"y_bound": "250", "z_bound": 3, "sieve_primes": [2, "3"], "workers": 2})"));
  CHECK(c.y_bound == 250);
  CHECK(c.z_bound == 3);
  CHECK(c.sieve_primes == std::vector<Int>{2, 3});
  CHECK(c.workers == 2);
  CHECK(c.st_bound == d.st_bound);
  CHECK(config_from_json(to_json(c)).y_bound == 250);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"ybound": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"y_bound": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"sieve_primes": [4]})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"workers": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse("[1]")), std::invalid_argument);

  const std::string path = "harness_test_config.json";
  { std::ofstream(path) << R"({"height_bound": 77})"; }
  CHECK(load_config_file(path).height_bound == 77);
  { std::ofstream(path) << "{not json"; }
  CHECK_THROWS_AS(load_config_file(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("published solution list") {
  CHECK(known_solutions() == printed_solutions());
  for (const auto& t : known_solutions()) {
    CHECK(solves_main(t));
    CHECK(is_pairwise_coprime(t));
  }
  CHECK(known_in_window(2, 1).size() == 8);
  CHECK(known_in_window(1, 1).size() == 6);
  CHECK(known_in_window(1, 0).size() == 2);
}

TEST_CASE("window search against a naive search") {
  CHECK(primitive_solutions(2, 1) == printed_solutions());
  CHECK(primitive_solutions(300, 2) == naive_window(300, 2));
  CHECK(primitive_solutions(300, 2) == printed_solutions());
  CHECK(primitive_solutions(3000, 3, 3) == primitive_solutions(3000, 3, 1));
  CHECK_THROWS_AS(primitive_solutions(10, 11), std::invalid_argument);
}

TEST_CASE("case solutions lift to the main equation") {
  CHECK(lift_case_solution(3, {1, 0, 1}) == std::vector<SolutionTriple>{{-3, -2, 1}, {3, -2, 1}});
  CHECK(lift_case_solution(1, {1, 0, 1}) == std::vector<SolutionTriple>{{-1, 0, 1}, {1, 0, 1}});
  CHECK(lift_case_solution(2, {1, 0, 0}) == std::vector<SolutionTriple>{{-1, -1, 0}, {1, -1, 0}});
  CHECK(lift_case_solution(5, {0, 1, 1}) == std::vector<SolutionTriple>{{0, 1, 1}});
  CHECK(lift_case_solution(6, {0, 1, -1}) == std::vector<SolutionTriple>{{0, -1, -1}});
  CHECK(lift_case_solution(3, {2, 1, 1}).empty());
  CHECK_THROWS_AS(lift_case_solution(7, {1, 0, 1}), std::out_of_range);
}

TEST_CASE("published point lists") {
  CHECK(published_points("C6.-2") ==
        std::vector<CurvePoint>{CurvePoint::affine_point(-1, -4), CurvePoint::affine_point(-1, 4)});
  CHECK(published_points("C3.2")->empty());
  CHECK_FALSE(published_points("C6.2"));
  const CurveInventory inv = curve_inventory("C3.0", 100);
  CHECK(inv.consistent());
  CHECK(inv.points.size() == 3);
  const CurveInventory extra = curve_inventory("C6.2", 200);
  CHECK_FALSE(extra.expected);
  CHECK(extra.points == std::vector<CurvePoint>{CurvePoint::affine_point(3, -108),
                                                CurvePoint::affine_point(3, 108)});
}

TEST_CASE("identity suite and covers") {
  CHECK(verify_identities().ok());
  const std::vector<Int> primes{2, 3, 5, 7, 11, 13};
  for (const char* id : {"C3.1", "C3.0", "C6.0", "C6.1"}) {
    CAPTURE(id);
    CHECK(covers_report(id, primes).ok());
  }
  CHECK(local_report("C3.2", 2).ok());
}

TEST_CASE("end-to-end report records") {
  RunConfig cfg;
  cfg.y_bound = 2;
  cfg.z_bound = 1;
  const VerificationReport rep = end_to_end_search(cfg);
  CHECK(rep.ok());
  CHECK(exit_status(rep) == 0);
  CHECK(rep.found_solutions.size() == 8);
  const auto records = report_records(rep);
  REQUIRE(records.size() >= 3);
  CHECK(records.front()["record"] == "header");
  CHECK(records.front()["schema_version"] == kReportSchemaVersion);
  CHECK(records.back()["record"] == "footer");
  CHECK(records.back()["ok"] == true);
  std::set<std::string> kinds;
  for (const auto& r : records) {
    CHECK(nlohmann::json::parse(r.dump()) == r);
    kinds.insert(r["record"].get<std::string>());
  }
  CHECK(kinds.count("solutions") == 1);
  CHECK(kinds.count("case") == 1);
  CHECK(report_summary(rep).find("verdict: OK") != std::string::npos);

  VerificationReport bad = rep;
  bad.found_solutions.pop_back();
  bad.cases.front().discrepancies.push_back("injected");
  CHECK_FALSE(bad.ok());
  CHECK(exit_status(bad) == 1);
  CHECK(report_records(bad).back()["ok"] == false);
}

}  // TEST_SUITE
