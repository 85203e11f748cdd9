#pragma once

/**
 * Homogeneous binary forms with integer coefficients.
 *
 * A form of degree d is stored as d+1 integers; coefficient i multiplies
 * s^(d-i) t^i. Products and sums stay homogeneous, which is all the
 * symbolic identity checks need (they compare forms coefficient-wise).
 */

#include "gfe/exact_int.hpp"
#include "gfe/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gfe {

class BinaryForm {
 public:
  BinaryForm() = default;
  /// Throws std::invalid_argument unless coeffs.size() == degree + 1.
  BinaryForm(int degree, std::vector<Int> coeffs);
  BinaryForm(int degree, std::initializer_list<long> coeffs);

  static BinaryForm zero(int degree);
  static BinaryForm first_variable();   // s
  static BinaryForm second_variable();  // t
  static BinaryForm constant(const Int& c);

  int degree() const { return degree_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Int operator()(const Int& s, const Int& t) const;
  /// Machine-word evaluation; empty if any intermediate overflows 128 bits.
  std::optional<__int128> eval_checked(std::int64_t s, std::int64_t t) const;

  /// f(X, 1).
  Poly dehomogenize() const;
  /// Homogenize p to the given degree (>= deg p). Throws if p is not integral.
  static BinaryForm homogenize(const Poly& p, int degree);

  /// f(s, -t) and f(-s, t).
  BinaryForm negate_second() const;
  BinaryForm negate_first() const;
  BinaryForm pow(unsigned e) const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Int& c);

  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Int& c) { return a *= c; }
  friend BinaryForm operator*(const Int& c, BinaryForm a) { return a *= c; }
  friend BinaryForm operator-(BinaryForm a) { return a *= Int(-1); }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

  std::string to_string(std::string_view s = "s", std::string_view t = "t") const;

 private:
  int degree_ = 0;
  std::vector<Int> coeffs_{Int(0)};
};

}  // namespace gfe
