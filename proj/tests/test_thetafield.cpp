#include "gfe/thetafield.hpp"

#include <doctest.h>

using namespace gfe;

namespace {

ThetaElt elt(Rational c0, Rational c1, Rational c2, Rational c3, Rational c4) {
  return ThetaElt({c0, c1, c2, c3, c4});
}

}  // namespace

TEST_SUITE("thetafield") {

TEST_CASE("reduction modulo the minimal polynomial") {
  CHECK(theta_minimal_polynomial() == Poly{-4, 5, 0, -5, 0, 1});
  const ThetaElt t = ThetaElt::theta();
  CHECK(t.pow(5) == elt(4, -5, 0, 5, 0));
  CHECK(ThetaElt::from_poly(theta_minimal_polynomial()).is_zero());
  CHECK(is_root(theta_minimal_polynomial(), t));
  const ThetaElt a = elt(1, 2, 0, -1, 3), b = elt(Rational(1, 2), 0, 7, 1, -2), c = elt(0, 1, 1, 0, 5);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(t.pow(7) == t.pow(3) * t.pow(4));
}

TEST_CASE("published roots, multipliers and square roots") {
  const ThetaCurveData& d = theta_curve_data();
  CHECK(d.quintic1 == Poly{63, 180, 210, 120, 35, 4});
  CHECK(d.quintic2 == Poly{405, 1170, 1350, 780, 225, 26});
  // phi1 = (theta^4 - 5theta^2 - 4theta - 3)/4, phi2 = (7theta^4 - 2theta^3 - 27theta^2 + 4theta - 33)/26
  CHECK(d.phi1 == Rational(1, 4) * elt(-3, -4, -5, 0, 1));
  CHECK(d.phi2 == Rational(1, 26) * elt(-33, 4, -27, -2, 7));
  CHECK(d.mu1 == elt(1, 1, -3, 2, 2));
  CHECK(d.mu2 == Rational(1, 26) * elt(21, -12, -10, 19, 18));
  CHECK(d.root1 == elt(13, -10, -15, 2, 3));
  CHECK(d.den1 == 6);
  CHECK(d.root2 == elt(-9, -4, 2, 1, 0));
  CHECK(d.den2 == 3);

  CHECK(is_root(d.quintic1, d.phi1));
  CHECK(is_root(d.quintic2, d.phi2));
  CHECK_FALSE(is_root(d.quintic1, d.phi2));
  const ThetaElt minus_one = ThetaElt::scalar(-1);
  const ThetaElt s1 = Rational(1, 36) * d.root1 * d.root1;
  const ThetaElt s2 = Rational(1, 9) * d.root2 * d.root2;
  CHECK(minus_one - d.phi1 == Rational(3) * d.mu1 * s1);
  CHECK(minus_one - d.phi2 == Rational(3) * d.mu2 * s2);
}

TEST_CASE("square identity suite rejects a perturbed multiplier") {
  CHECK(verify_square_identities().ok());
  ThetaCurveData bad = theta_curve_data();
  bad.mu1 = bad.mu1 + ThetaElt::scalar(1);
  CHECK_FALSE(verify_square_identities(bad).ok());
}

TEST_CASE("minimal polynomial mod 2 and irreducibility") {
  const auto shape = minpoly_mod_shape(2).shape();
  CHECK(shape == std::vector<std::pair<int, unsigned>>{{1, 1}, {2, 2}});
  CHECK(minpoly_irreducible_over_Q() == 11);
  CHECK(theta_identity_suite().ok());
}

}  // TEST_SUITE
