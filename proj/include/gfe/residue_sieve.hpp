#pragma once

/**
 * Exhaustive enumeration of residue tuples satisfying congruences.
 *
 * A sieve names k variables and carries a list of polynomial congruence
 * predicates. Each predicate reads "expr(vars) == 0 (mod q)" or
 * "expr(vars) != 0 (mod q)" with q dividing the enumeration modulus m,
 * so mixed conditions such as "s != t mod 2" inside a mod-32 sieve are
 * well defined. residues_mod() walks the full cube (Z/m)^k.
 */

#include "gfe/exact_int.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace gfe {

using ResidueTuple = std::vector<std::int64_t>;
using CongruenceExpr = std::function<Int(std::span<const Int>)>;

struct Congruence {
  std::string label;
  std::int64_t modulus = 0;
  bool must_vanish = true;  // false: expr must be nonzero mod `modulus`
  CongruenceExpr expr;

  bool holds(std::span<const Int> values) const;
};

Congruence congruent(std::string label, std::int64_t modulus, CongruenceExpr expr);
Congruence incongruent(std::string label, std::int64_t modulus, CongruenceExpr expr);

struct SieveLimits {
  std::int64_t max_power_of_two = 128;   // 2^7
  std::int64_t max_modulus = 729;        // 3^6
  std::uint64_t max_cube_size = 1u << 24;
};

struct ResidueSieve {
  std::vector<std::string> variables;
  std::vector<Congruence> constraints;
};

/// Every tuple in (Z/m)^k satisfying all constraints, in lexicographic order.
/// Throws std::invalid_argument if m < 2, a constraint modulus does not
/// divide m, or m / the cube exceeds `limits`.
std::vector<ResidueTuple> residues_mod(const ResidueSieve& sieve, std::int64_t m,
                                       const SieveLimits& limits = {});

std::string describe(const ResidueSieve& sieve);

}  // namespace gfe
