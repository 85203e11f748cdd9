#pragma once

/**
 * Univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored low degree first and kept normalized: no trailing
 * zeros, so the zero polynomial has an empty coefficient vector and degree -1.
 *
 * Text form is "c0 + c1*X + c2*X^2 + ..." in ascending degree with zero
 * terms omitted and negative coefficients written with " - ".
 * Poly::parse() accepts that form (and any term order).
 */

#include "gfe/exact_int.hpp"

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gfe {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, unsigned degree);
  static Poly x();
  static Poly from_ints(std::span<const Int> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  bool is_integral() const;
  /// Integer coefficients; throws std::domain_error if not integral.
  std::vector<Int> integer_coeffs() const;
  /// Smallest positive integer m with m*f integral.
  Int denominator_lcm() const;

  Poly derivative() const;
  /// f(-X).
  Poly reflect() const;
  Poly monic() const;
  Poly pow(unsigned e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::string_view var = "X") const;
  static Poly parse(std::string_view text, std::string_view var = "X");

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);
/// Throws std::domain_error if b does not divide a.
Poly exact_divide(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

/// Resultant via the fraction-free subresultant sequence over Z.
Rational resultant(const Poly& a, const Poly& b);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires deg f >= 1.
Rational discriminant(const Poly& f);

/// Horner evaluation of a rational polynomial at an element of any ring R
/// that accepts `R * Rational` style construction through `lift`.
template <class R, class Lift>
R horner(const Poly& f, const R& x, const R& zero, Lift lift) {
  R acc = zero;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + lift(*it);
  return acc;
}

/**
 * Resultant as the determinant of the Sylvester matrix, by Gaussian
 * elimination over a field F. Coefficients are given low degree first and
 * both leading coefficients must be nonzero. Used both as the route for
 * resultants over Q(sqrt d) and as an independent cross-check of
 * resultant().
 */
template <class F>
F sylvester_resultant(std::span<const F> a, std::span<const F> b, const F& zero,
                      const F& one) {
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  const std::size_t size = m + n;
  if (size == 0) return one;
  std::vector<std::vector<F>> mat(size, std::vector<F>(size, zero));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) mat[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) mat[n + r][r + i] = b[n - i];

  F det = one;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t piv = col;
    while (piv < size && mat[piv][col] == zero) ++piv;
    if (piv == size) return zero;
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      det = zero - det;
    }
    det = det * mat[col][col];
    for (std::size_t r = col + 1; r < size; ++r) {
      if (mat[r][col] == zero) continue;
      F factor = mat[r][col] / mat[col][col];
      for (std::size_t c = col; c < size; ++c) mat[r][c] = mat[r][c] - factor * mat[col][c];
    }
  }
  return det;
}

}  // namespace gfe
