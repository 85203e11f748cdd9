#pragma once

/**
 * Hyperelliptic models d*Y^2 = f(X) and their points.
 *
 * Points at infinity: for odd deg f there is exactly one (`infinity`).
 * For even deg f there are two (`infinity_plus`, `infinity_minus`) when
 * lc(f)/d is a nonzero rational square and none otherwise. On the
 * weighted projective model, infinity_plus is the point where
 * Y / X^(deg f / 2) tends to +sqrt(lc(f)/d).
 */

#include "gfe/exact_int.hpp"
#include "gfe/poly.hpp"

#include <compare>
#include <string>

namespace gfe {

class CurveModel {
 public:
  /// Throws std::invalid_argument unless twist != 0, f integral with
  /// deg f >= 1, and f squarefree (nonzero discriminant; deg 1 is allowed).
  CurveModel(Int twist, Poly f);

  const Int& twist() const { return twist_; }
  const Poly& rhs() const { return f_; }
  int degree() const { return f_.degree(); }
  int genus() const { return (f_.degree() - 1) / 2; }

  /// d*y^2 == f(x) exactly.
  bool contains(const Rational& x, const Rational& y) const;

  /// Twist folded into f: Y'^2 = d*f(X) with Y' = d*Y.
  CurveModel folded() const;

  /// "d*Y^2 = f(X)" text, omitting d when it is 1.
  std::string to_string() const;

  friend bool operator==(const CurveModel& a, const CurveModel& b) = default;

 private:
  Int twist_;
  Poly f_;
};

struct CurvePoint {
  enum class Kind { infinity, infinity_plus, infinity_minus, affine };
  Kind kind = Kind::affine;
  Rational x, y;

  static CurvePoint at_infinity(Kind k) { return CurvePoint{k, Rational(0), Rational(0)}; }
  static CurvePoint affine_point(Rational x, Rational y) { return CurvePoint{Kind::affine, x, y}; }

  bool is_infinite() const { return kind != Kind::affine; }
  std::string to_string() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) = default;
  /// Canonical order: infinite points first, then affine by (x, y).
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);
};

/// D = D' - (deg u / 2)(inf+ + inf-), D' cut out by u(X) = 0, Y = v(X).
struct MumfordDivisor {
  Poly u;  // monic
  Poly v;  // deg v < deg u
};

}  // namespace gfe
