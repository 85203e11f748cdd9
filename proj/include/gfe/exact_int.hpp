#pragma once

/**
 * Integer utilities shared by every other module.
 *
 * All integers are GMP integers (`Int`) and all rationals GMP rationals
 * (`Rational`). Nothing in the library touches floating point.
 *
 * Sign conventions: gcd() is always nonnegative, with gcd(0, 0) = 0.
 * squarefree_part() keeps the sign of its argument.
 */

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfe {

using Int = mpz_class;
using Rational = mpq_class;

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

/// Returns r with r^k == n when n is an exact k-th power.
/// For even k, n must be nonnegative and r >= 0; for odd k, sign(r) = sign(n).
std::optional<Int> perfect_power_root(const Int& n, unsigned k);

/// Jacobi symbol (a/n) for odd n >= 1. Throws std::invalid_argument otherwise.
int jacobi(const Int& a, const Int& n);

/// Exponent of p in n. n must be nonzero.
unsigned ord_p(const Int& n, const Int& p);

bool is_square(const Int& n);

/// Deterministic primality for word-size inputs.
bool is_prime(std::uint64_t n);

/// Primes below `limit`, ascending.
std::vector<std::uint64_t> primes_below(std::uint64_t limit);

/// Factorization of |n| by trial division. The cofactor left after trial
/// division to `trial_limit` must be 1 or a (word-size) prime; otherwise
/// std::domain_error is thrown. No general factoring is attempted.
std::vector<std::pair<Int, unsigned>> factor_small(const Int& n,
                                                   std::uint64_t trial_limit = 1000000);

/// Signed squarefree part: n = squarefree_part(n) * m^2.
Int squarefree_part(const Int& n);

/// All squarefree divisors of n with both signs, ascending.
std::vector<Int> signed_squarefree_divisors(const Int& n);

/// Floor division, rounding toward negative infinity.
Int floor_div(const Int& a, const Int& b);

/// num/den in lowest terms with positive denominator; throws std::domain_error if den == 0.
Rational frac(const Int& num, const Int& den);

/// Rational square test; on success returns the nonnegative root.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Decimal text of an Int / Rational ("p/q" for non-integers).
std::string to_string(const Int& n);
std::string to_string(const Rational& q);

/// Parses a decimal integer or a fraction "p/q". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace gfe
