#pragma once

/**
 * Arithmetic in Z[sqrt d] and Q(sqrt d), and the unit-twisted quintic
 * forms g_j, h_j defined by
 *
 *     eps^j (v + w sqrt3)^5 = g_j(v, w) + h_j(v, w) sqrt3,   eps = sqrt3 - 2.
 *
 * Only d = 2, 3 mod 4 is supported (the orders Z[sqrt d] with integral
 * basis {1, sqrt d}). Mixing elements with different d throws
 * std::invalid_argument.
 */

#include "gfe/binary_form.hpp"
#include "gfe/curve_model.hpp"
#include "gfe/exact_int.hpp"
#include "gfe/poly.hpp"

#include <optional>
#include <string>

namespace gfe {

/// Throws std::invalid_argument unless d is squarefree, d != 0, 1 and d = 2, 3 mod 4.
void validate_radicand(const Int& d);

struct QuadInt {
  Int d, a, b;  // a + b sqrt(d)

  QuadInt(Int d, Int a, Int b);
  static QuadInt one(const Int& d) { return QuadInt(d, 1, 0); }

  QuadInt conj() const { return QuadInt(d, a, -b); }
  Int norm() const { return a * a - d * b * b; }
  QuadInt pow(unsigned e) const;

  friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
  friend QuadInt operator-(const QuadInt& x) { return QuadInt(x.d, -x.a, -x.b); }
  friend bool operator==(const QuadInt& x, const QuadInt& y) = default;

  std::string to_string() const;
};

struct QuadRational {
  Int d;
  Rational a, b;

  QuadRational(Int d, Rational a, Rational b);
  QuadRational(const QuadInt& q) : QuadRational(q.d, Rational(q.a), Rational(q.b)) {}
  static QuadRational zero(const Int& d) { return QuadRational(d, 0, 0); }
  static QuadRational one(const Int& d) { return QuadRational(d, 1, 0); }

  QuadRational conj() const { return QuadRational(d, a, -b); }
  Rational norm() const { return a * a - Rational(d) * b * b; }

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y);
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y);
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y);
  /// Throws std::domain_error on division by zero.
  friend QuadRational operator/(const QuadRational& x, const QuadRational& y);
  friend bool operator==(const QuadRational& x, const QuadRational& y) = default;

  std::string to_string() const;
};

/// A binary form with coefficients in Z[sqrt d], kept as rational + irrational parts.
struct QuadForm {
  Int d;
  BinaryForm rational;
  BinaryForm irrational;

  QuadForm conj() const { return QuadForm{d, rational, -irrational}; }
  friend QuadForm operator*(const QuadForm& x, const QuadForm& y);
  friend QuadForm operator*(const QuadInt& c, const QuadForm& x);
  friend bool operator==(const QuadForm& x, const QuadForm& y) = default;
};

struct QuinticFormPair {
  int j = 0;
  BinaryForm g;
  BinaryForm h;
  friend bool operator==(const QuinticFormPair&, const QuinticFormPair&) = default;
};

/// The fundamental unit sqrt3 - 2 of Z[sqrt3].
QuadInt fundamental_unit();

/// eps^j for |j| <= 2; throws std::out_of_range otherwise.
QuadInt unit_power(int j);

/// (g_j, h_j) by formal expansion of eps^j (v + w sqrt3)^5.
QuinticFormPair gh_forms(int j);

/// (g_j, h_j) as literal coefficient tables (the published display).
QuinticFormPair gh_table(int j);

/// Exact k-th root (k odd) in Z[sqrt d], d > 0, if alpha is a k-th power.
std::optional<QuadInt> odd_root(const QuadInt& alpha, unsigned k);

struct UnitFifthPower {
  int j;
  Int v, w;
};

/// Writes alpha = eps^j (v + w sqrt3)^5 with |j| <= 2 if possible.
std::optional<UnitFifthPower> unit_fifth_power_decomposition(const QuadInt& alpha);

/// Resultant over Q(sqrt d) of two polynomials with coefficients in Q(sqrt d)
/// (low degree first), via the Sylvester determinant.
QuadRational quad_resultant(const std::vector<QuadRational>& a, const std::vector<QuadRational>& b);

/// True iff twist * y^2 == f(x) exactly in Q(sqrt d).
bool quad_point_on_curve(const CurveModel& c, const QuadRational& x, const QuadRational& y);

}  // namespace gfe
