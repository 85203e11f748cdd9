#include "gfe/case_pipeline.hpp"
#include "gfe/parametrization.hpp"

#include <doctest.h>

#include <numeric>

using namespace gfe;

namespace {

bool side_conditions(int i, long s, long t) {
  auto m = [](long a, long n) { return ((a % n) + n) % n; };
  if (i <= 2) return m(s, 2) != 0 && m(s - t, 3) != 0;
  if (i <= 4) return m(s - t, 2) != 0 && m(s - t, 3) != 0;
  return m(s - t, 2) != 0 && m(t, 3) != 0;
}

// Direct search for u^5 = f_i(s, t), independent of the pipeline.
std::vector<StuSolution> brute(int i, long bound) {
  std::vector<StuSolution> out;
  const BinaryForm f = quartic_form(i);
  for (long s = -bound; s <= bound; ++s)
    for (long t = -bound; t <= bound; ++t) {
      if (std::gcd(s, t) != 1 || !side_conditions(i, s, t)) continue;
      if (const auto u = perfect_power_root(f(s, t), 5)) out.push_back({s, t, *u});
    }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE("case-pipeline") {

TEST_CASE("case 4 is empty") {
  const CaseReport r = eliminate_f4();
  CHECK(r.ok());
  CHECK(r.sieves.front().survivors.empty());
  const CaseReport control = eliminate_f4(false);
  CHECK(control.ok());
  CHECK_FALSE(control.sieves.front().survivors.empty());
  const BinaryForm f4 = quartic_form(4);
  for (long s = -40; s <= 40; ++s)
    for (long t = -40; t <= 40; ++t)
      if (std::gcd(s, t) == 1 && (s - t) % 2 != 0) CHECK(ord_p(f4(s, t), 2) == 1);
}

TEST_CASE("case 1 and case 2 splits") {
  const SplitResult a = case1_split(1, 0, 1);
  CHECK(a.curve_id == "case1");
  CHECK(a.point == CurvePoint::affine_point(1, -1));
  CHECK(case1_split(-1, 0, 1).point == CurvePoint::affine_point(1, -1));
  CHECK_THROWS_AS(case1_split(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(case1_split(1, 0, 2), std::invalid_argument);

  const SplitResult b = case2_split(1, 0, 0);
  CHECK(b.curve_id == "case2b");
  CHECK(b.split.scheme == "case2.2");
  CHECK(b.point == CurvePoint::at_infinity(CurvePoint::Kind::infinity));
  CHECK_THROWS_AS(case2_split(1, 1, 0), std::invalid_argument);
}

TEST_CASE("case 1 pullback of the three points") {
  const Pullback good = case1_pullback(CurvePoint::affine_point(1, -1));
  CHECK(good.admissible);
  REQUIRE(good.st);
  CHECK(*good.st == std::pair<Int, Int>{1, 0});
  CHECK_FALSE(case1_pullback(CurvePoint::affine_point(1, 1)).admissible);
  CHECK_FALSE(case1_pullback(CurvePoint::at_infinity(CurvePoint::Kind::infinity)).admissible);
}

TEST_CASE("case 3 and 5 maps at the unit") {
  const Case3Relations r = case3_reduction(1, 0, 0);
  CHECK(r.g == 1);
  CHECK(r.h == 0);
  CHECK(r.on_curve);
  CHECK(sorted(r.st) == std::vector<std::pair<Int, Int>>{{-1, 0}, {0, -1}, {0, 1}, {1, 0}});
  for (int j : {-2, -1, 1, 2}) CHECK(case3_reduction(1, 0, j).st.empty());

  const TwiceSquareRelations f = case5_maps(1, 0, 0);
  CHECK(f.both_twice_squares);
  CHECK(f.curve_relation);
  CHECK(f.st.size() == 2);
  CHECK(case6_maps(1, 0, 0).st.size() == 2);
  CHECK(case6_maps(1, 0, 2).st.empty());
}

TEST_CASE("case searches match the published lists") {
  const std::vector<StuSolution> published[] = {
      {{-1, 0, 1}, {1, 0, 1}},
      {{-1, 0, 0}, {1, 0, 0}},
      {{-1, 0, 1}, {0, -1, 1}, {0, 1, 1}, {1, 0, 1}},
      {},
      {{0, -1, 1}, {0, 1, 1}},
      {{0, -1, -1}, {0, 1, -1}},
  };
  for (int i : {1, 2, 3, 5, 6}) {
    CAPTURE(i);
    const CaseReport r = solve_case(i, 40);
    CHECK(r.ok());
    CHECK(sorted(r.solutions) == published[i - 1]);
    CHECK(brute(i, 40) == published[i - 1]);
    CHECK(sorted(expected_solutions(i)) == published[i - 1]);
  }
  CHECK(brute(4, 40).empty());
  CHECK_THROWS(solve_case(4, 10));
}

TEST_CASE("case searches do not depend on the worker count") {
  for (int i : {3, 6}) {
    const CaseReport one = solve_case(i, 150, {1, true});
    const CaseReport three = solve_case(i, 150, {3, true});
    CHECK(one.solutions == three.solutions);
    CHECK(one.ok() == three.ok());
  }
}

TEST_CASE("case 6 arguments") {
  const CaseReport j1 = case6_j1_argument();
  CHECK(j1.ok());
  const CaseReport j2 = case6_j2_argument(60);
  CHECK(j2.ok());
  const CaseReport jm2 = case6_jm2_argument(60, 100);
  CHECK(jm2.ok());
  CHECK_FALSE(jm2.checks.empty());
}

}  // TEST_SUITE
