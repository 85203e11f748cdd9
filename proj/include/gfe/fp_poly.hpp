#pragma once

// Polynomials over a small prime field F_p and exhaustive factorization.
// Only meant for tiny p and degree (p < 100, degree <= ~6).

#include "gfe/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfe {

class FpPoly {
 public:
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);
  /// Reduction of an integral Poly mod p.
  static FpPoly reduce(const Poly& f, std::int64_t p);

  std::int64_t prime() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string() const;

 private:
  void normalize();
  std::int64_t p_;
  std::vector<std::int64_t> c_;
};

struct FpDivMod {
  FpPoly quotient;
  FpPoly remainder;
};
FpDivMod divmod(const FpPoly& a, const FpPoly& b);
FpPoly gcd(const FpPoly& a, const FpPoly& b);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Factorization of a nonzero polynomial mod p into monic irreducibles
/// (leading constant dropped), by trial division with every monic candidate
/// of increasing degree. Factors ordered by (degree, coefficients).
std::vector<FpFactor> factor_mod_p(const FpPoly& f);

bool is_squarefree_mod_p(const FpPoly& f);

/// Smallest prime p < limit (not dividing the leading coefficient) with
/// f irreducible mod p; empty if none. Irreducibility mod one such p
/// certifies irreducibility over Q.
std::optional<std::int64_t> irreducibility_witness(const Poly& f, std::int64_t limit = 100);

}  // namespace gfe
