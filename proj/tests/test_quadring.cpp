#include "gfe/hypercurve.hpp"
#include "gfe/quadring.hpp"

#include <doctest.h>

#include <map>

using namespace gfe;

namespace {

// Coefficients of v^5, v^4 w, ..., w^5 as printed in the published tables.
const std::map<int, std::pair<BinaryForm, BinaryForm>>& printed_tables() {
  static const std::map<int, std::pair<BinaryForm, BinaryForm>> t{
      {-2, {BinaryForm(5, {7, 60, 210, 360, 315, 108}), BinaryForm(5, {4, 35, 120, 210, 180, 63})}},
      {-1, {BinaryForm(5, {-2, -15, -60, -90, -90, -27}), BinaryForm(5, {-1, -10, -30, -60, -45, -18})}},
      {0, {BinaryForm(5, {1, 0, 30, 0, 45, 0}), BinaryForm(5, {0, 5, 0, 30, 0, 9})}},
      {1, {BinaryForm(5, {-2, 15, -60, 90, -90, 27}), BinaryForm(5, {1, -10, 30, -60, 45, -18})}},
      {2, {BinaryForm(5, {7, -60, 210, -360, 315, -108}), BinaryForm(5, {-4, 35, -120, 210, -180, 63})}},
  };
  return t;
}

}  // namespace

TEST_SUITE("quadring") {

TEST_CASE("ring arithmetic") {
  const QuadInt a(3, -2, 1), b(3, 2, 1);
  CHECK(a * b == QuadInt(3, -1, 0));
  CHECK(QuadInt(3, 1, 1).norm() == -2);
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK(a.conj() == QuadInt(3, -2, -1));
  CHECK(QuadInt(3, 1, 2).pow(3) == QuadInt(3, 1, 2) * QuadInt(3, 1, 2) * QuadInt(3, 1, 2));
  CHECK_THROWS_AS(QuadInt(3, 1, 1) + QuadInt(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate_radicand(5), std::invalid_argument);  // 5 = 1 mod 4
  CHECK_THROWS_AS(validate_radicand(12), std::invalid_argument);
  CHECK_NOTHROW(validate_radicand(-1));
}

TEST_CASE("multiplicativity of norm and conjugation") {
  for (long a1 = -4; a1 <= 4; ++a1)
    for (long b1 = -3; b1 <= 3; ++b1)
      for (long a2 = -3; a2 <= 3; a2 += 2)
        for (long b2 = -2; b2 <= 2; ++b2) {
          const QuadInt x(3, a1, b1), y(3, a2, b2);
          CHECK((x * y).norm() == x.norm() * y.norm());
          CHECK((x * y).conj() == x.conj() * y.conj());
        }
}

TEST_CASE("the unit sqrt3 - 2 has norm +1") {
  const QuadInt eps = fundamental_unit();
  CHECK(eps == QuadInt(3, -2, 1));
  CHECK(eps.norm() == 1);  // (-2)^2 - 3
  for (int j = -2; j <= 2; ++j) {
    CHECK(unit_power(j) * unit_power(-j) == QuadInt::one(3));
    CHECK(unit_power(j).norm() == 1);
  }
  CHECK(unit_power(2) == eps * eps);
  CHECK_THROWS_AS(unit_power(3), std::out_of_range);
}

TEST_CASE("g_j, h_j: printed tables, stored tables, expansion") {
  for (const auto& [j, gh] : printed_tables()) {
    CAPTURE(j);
    CHECK(gh_table(j).g == gh.first);
    CHECK(gh_table(j).h == gh.second);
    CHECK(gh_forms(j) == gh_table(j));
    // pointwise against the ring itself
    for (long v = -3; v <= 3; ++v)
      for (long w = -3; w <= 3; ++w) {
        const QuadInt x = unit_power(j) * QuadInt(3, v, w).pow(5);
        CHECK(x.a == gh.first(v, w));
        CHECK(x.b == gh.second(v, w));
      }
  }
}

TEST_CASE("norm identity carries N(eps)^j = +1, not (-1)^j") {
  const BinaryForm base = BinaryForm(2, {1, 0, -3}).pow(5);
  for (int j = -2; j <= 2; ++j) {
    const auto gh = gh_forms(j);
    const BinaryForm lhs = gh.g * gh.g - Int(3) * gh.h * gh.h;
    CHECK(lhs == base);
    CHECK((lhs == -base) == false);
  }
  // spot value at (v, w) = (1, 1), j = 0: 76^2 - 3 * 44^2 = -32 = (-2)^5
  CHECK(gh_forms(0).g(1, 1) == 76);
  CHECK(gh_forms(0).h(1, 1) == 44);
  // at j = 1, (v, w) = (1, 0): g^2 - 3h^2 = 4 - 3 = +1
  CHECK(gh_forms(1).g(1, 0) == -2);
  CHECK(gh_forms(1).h(1, 0) == 1);
}

TEST_CASE("fifth roots and unit decomposition") {
  const QuadInt r(3, 2, -1);
  CHECK(odd_root(r.pow(5), 5) == r);
  CHECK(odd_root(-r.pow(5), 5) == -r);
  CHECK_FALSE(odd_root(r.pow(5) + QuadInt(3, 1, 0), 5));
  for (int j = -2; j <= 2; ++j)
    for (long v = -4; v <= 4; ++v)
      for (long w = -4; w <= 4; ++w) {
        if (v == 0 && w == 0) continue;
        const QuadInt alpha = unit_power(j) * QuadInt(3, v, w).pow(5);
        const auto d = unit_fifth_power_decomposition(alpha);
        REQUIRE(d);
        CHECK(d->j == j);
        CHECK(unit_power(d->j) * QuadInt(3, d->v, d->w).pow(5) == alpha);
      }
  CHECK_FALSE(unit_fifth_power_decomposition(QuadInt(3, 2, 0)));
}

TEST_CASE("resultants over Q(sqrt3)") {
  const QuadRational one(3, 1, 0);
  // s^2 - 2(1 + sqrt3) st + t^2 and its conjugate
  const std::vector<QuadRational> p{one, QuadRational(3, -2, -2), one};
  const std::vector<QuadRational> q{one, QuadRational(3, -2, 2), one};
  CHECK(quad_resultant(p, q) == QuadRational(3, 48, 0));
  // Res(X - 2, X - sqrt3) = 2 - sqrt3
  CHECK(quad_resultant({QuadRational(3, -2, 0), one}, {QuadRational(3, 0, -1), one}) ==
        QuadRational(3, 2, -1));
}

TEST_CASE("points over quadratic fields") {
  const CurveModel c1(1, Poly{-3, 0, 0, 0, 0, 4});
  const QuadRational i(-1, 0, 1);
  CHECK(quad_point_on_curve(c1, i, QuadRational(-1, 1, 2)));
  CHECK_FALSE(quad_point_on_curve(c1, i, QuadRational(-1, 1, -2)));
  const CurveModel c2(1, Poly{-48, 0, 0, 0, 0, 1});
  CHECK(quad_point_on_curve(c2, QuadRational(2, 6, 2), QuadRational(2, 124, 76)));
  CHECK(quad_point_on_curve(c2, QuadRational(2, 6, -2), QuadRational(2, 124, -76)));
  CHECK_THROWS_AS(quad_point_on_curve(c2, QuadRational(2, 6, 2), QuadRational(3, 1, 0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
