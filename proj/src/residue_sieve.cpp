#include "gfe/residue_sieve.hpp"

#include <stdexcept>

namespace gfe {

bool Congruence::holds(std::span<const Int> values) const {
  Int r = expr(values) % Int(static_cast<long>(modulus));
  return must_vanish ? r == 0 : r != 0;
}

Congruence congruent(std::string label, std::int64_t modulus, CongruenceExpr expr) {
  return Congruence{std::move(label), modulus, true, std::move(expr)};
}

Congruence incongruent(std::string label, std::int64_t modulus, CongruenceExpr expr) {
  return Congruence{std::move(label), modulus, false, std::move(expr)};
}

namespace {

void check_modulus(std::int64_t m, std::size_t k, const SieveLimits& limits) {
  if (m < 2) throw std::invalid_argument("residues_mod: modulus must be >= 2");
  bool power_of_two = (m & (m - 1)) == 0;
  if (power_of_two ? m > limits.max_power_of_two : m > limits.max_modulus)
    throw std::invalid_argument("residues_mod: modulus " + std::to_string(m) + " above cap");
  std::uint64_t cube = 1;
  for (std::size_t i = 0; i < k; ++i) {
    cube *= static_cast<std::uint64_t>(m);
    if (cube > limits.max_cube_size)
      throw std::invalid_argument("residues_mod: residue cube too large");
  }
}

}  // namespace

std::vector<ResidueTuple> residues_mod(const ResidueSieve& sieve, std::int64_t m,
                                       const SieveLimits& limits) {
  const std::size_t k = sieve.variables.size();
  check_modulus(m, k, limits);
  for (const auto& c : sieve.constraints)
    if (c.modulus < 1 || m % c.modulus != 0)
      throw std::invalid_argument("residues_mod: constraint '" + c.label +
                                  "' modulus does not divide " + std::to_string(m));

  std::vector<ResidueTuple> out;
  ResidueTuple tuple(k, 0);
  std::vector<Int> values(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) values[i] = static_cast<long>(tuple[i]);
    bool ok = true;
    for (const auto& c : sieve.constraints) {
      if (!c.holds(values)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(tuple);
    // odometer, last variable fastest
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < m) break;
      tuple[pos] = 0;
      if (pos == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::string describe(const ResidueSieve& sieve) {
  std::string s = "vars(";
  for (std::size_t i = 0; i < sieve.variables.size(); ++i)
    s += (i ? "," : "") + sieve.variables[i];
  s += ")";
  for (const auto& c : sieve.constraints)
    s += "; " + c.label + (c.must_vanish ? " == 0" : " != 0") + " mod " +
         std::to_string(c.modulus);
  return s;
}

}  // namespace gfe
