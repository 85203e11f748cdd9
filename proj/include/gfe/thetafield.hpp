#pragma once

/**
 * The quintic field L = Q(theta), theta^5 - 5 theta^3 + 5 theta - 4 = 0.
 *
 * Elements are stored as the unique representative c0 + c1 theta + ... + c4 theta^4.
 * L is treated as Q[X]/(m(X)); no integral basis or ideal arithmetic.
 */

#include "gfe/case_report.hpp"
#include "gfe/fp_poly.hpp"
#include "gfe/poly.hpp"

#include <array>
#include <optional>
#include <string>

namespace gfe {

/// X^5 - 5X^3 + 5X - 4.
const Poly& theta_minimal_polynomial();

class ThetaElt {
 public:
  ThetaElt() = default;
  explicit ThetaElt(std::array<Rational, 5> coords);
  /// Reduces an arbitrary polynomial in theta modulo the minimal polynomial.
  static ThetaElt from_poly(const Poly& p);
  static ThetaElt scalar(const Rational& c);
  static ThetaElt theta();

  const std::array<Rational, 5>& coords() const { return c_; }
  ThetaElt pow(unsigned e) const;
  bool is_zero() const;

  friend ThetaElt operator+(const ThetaElt& a, const ThetaElt& b);
  friend ThetaElt operator-(const ThetaElt& a, const ThetaElt& b);
  friend ThetaElt operator*(const ThetaElt& a, const ThetaElt& b);
  friend ThetaElt operator*(const Rational& c, const ThetaElt& a);
  friend bool operator==(const ThetaElt& a, const ThetaElt& b) = default;

  /// "[c0, c1, c2, c3, c4]" with exact fractions.
  std::string to_string() const;

 private:
  std::array<Rational, 5> c_{};
};

/// f(e) == 0 exactly in L.
bool is_root(const Poly& f, const ThetaElt& e);

/// Published data attached to the genus-4 curve C(6,-2): the roots phi of its
/// two quintic factors, the multipliers mu, and the square roots r with their
/// denominators in  -1 - phi_i = 3 mu_i (r_i / den_i)^2.
struct ThetaCurveData {
  Poly quintic1, quintic2;
  ThetaElt phi1, phi2;
  ThetaElt mu1, mu2;
  ThetaElt root1, root2;
  Rational den1, den2;
};

const ThetaCurveData& theta_curve_data();

/// Checks both quintic-root memberships and both square identities exactly.
CaseReport verify_square_identities(const ThetaCurveData& data = theta_curve_data());

struct FactorShape {
  std::vector<FpFactor> factors;
  /// degree -> multiplicity pairs, e.g. {(1,1), (2,2)} for X (X^2+X+1)^2.
  std::vector<std::pair<int, unsigned>> shape() const;
};

/// Factorization of f mod p (defaults to the minimal polynomial mod 2).
FactorShape minpoly_mod_shape(std::int64_t p = 2, const Poly& f = theta_minimal_polynomial());

/// Prime witness below `limit` certifying irreducibility over Q, if one exists.
std::optional<std::int64_t> minpoly_irreducible_over_Q(const Poly& f = theta_minimal_polynomial(),
                                                       std::int64_t limit = 100);

/// Union of the theta-field identity checks (roots, squares, mod-2 shape, irreducibility).
CaseReport theta_identity_suite();

}  // namespace gfe
