#include "gfe/parametrization.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace gfe {

namespace {

const BinaryForm S = BinaryForm::first_variable();
const BinaryForm T = BinaryForm::second_variable();

BinaryForm c(long k) { return BinaryForm::constant(Int(k)); }

bool mod_ne(const Int& a, const Int& b, long m) {
  Int r = (a - b) % m;
  return r != 0;
}

std::optional<__int128> to_i128(const Int& n) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 120) return std::nullopt;
  const Int mag = abs(n);
  const Int hi = mag >> 64;
  const Int lo = mag - (hi << 64);
  unsigned __int128 v = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
  return n < 0 ? -static_cast<__int128>(v) : static_cast<__int128>(v);
}

}  // namespace

ParamCase param_case(ParamId id, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  if (sign == -1 && id != ParamId::P1) throw std::invalid_argument("only P1 carries a sign");
  ParamCase pc;
  pc.id = id;
  pc.sign = sign;
  switch (id) {
    case ParamId::P1:
      pc.x = (S * S - c(2) * S * T - c(2) * T * T) *
             (S.pow(4) + c(2) * S.pow(3) * T + c(6) * S * S * T * T - c(4) * S * T.pow(3) +
              c(4) * T.pow(4)) *
             Int(sign);
      pc.y = S * (S + c(2) * T) * (S * S - c(2) * S * T + c(4) * T * T);
      pc.z = c(-4) * T * (S - T) * (S * S + S * T + T * T);
      break;
    case ParamId::P2:
      pc.x = c(3) * (S - T) * (S + T) *
             (S.pow(4) + c(2) * S.pow(3) * T + c(6) * S * S * T * T + c(2) * S * T.pow(3) +
              T.pow(4));
      pc.y = S.pow(4) - c(4) * S.pow(3) * T - c(6) * S * S * T * T - c(4) * S * T.pow(3) + T.pow(4);
      pc.z = c(2) * (S.pow(4) + c(2) * S.pow(3) * T + c(2) * S * T.pow(3) + T.pow(4));
      break;
    case ParamId::P3:
      pc.x = c(6) * S * T * (c(3) * S.pow(4) + T.pow(4));
      pc.y = c(-3) * S.pow(4) + c(6) * S * S * T * T + T.pow(4);
      pc.z = c(3) * S.pow(4) + c(6) * S * S * T * T - T.pow(4);
      break;
  }
  return pc;
}

std::vector<ParamCase> all_param_cases() {
  return {param_case(ParamId::P1, 1), param_case(ParamId::P1, -1), param_case(ParamId::P2),
          param_case(ParamId::P3)};
}

std::string ParamCase::name() const {
  switch (id) {
    case ParamId::P1: return sign > 0 ? "P1+" : "P1-";
    case ParamId::P2: return "P2";
    case ParamId::P3: return "P3";
  }
  return "?";
}

bool ParamCase::conditions_hold(const Int& s, const Int& t) const {
  switch (id) {
    case ParamId::P1: return mod_ne(s, 0, 2) && mod_ne(s, t, 3);
    case ParamId::P2: return mod_ne(s, t, 2) && mod_ne(s, t, 3);
    case ParamId::P3: return mod_ne(s, t, 2) && mod_ne(t, 0, 3);
  }
  return false;
}

bool is_pairwise_coprime(const SolutionTriple& t) {
  return gcd(t.x, t.y) == 1 && gcd(t.x, t.z) == 1 && gcd(t.y, t.z) == 1;
}

bool solves_cubic_sum(const SolutionTriple& t) {
  return t.x * t.x == t.y * t.y * t.y + t.z * t.z * t.z;
}

bool solves_main(const SolutionTriple& t) {
  Int z15;
  mpz_pow_ui(z15.get_mpz_t(), t.z.get_mpz_t(), 15);
  return t.x * t.x + t.y * t.y * t.y == z15;
}

ParamEval param_eval(const ParamCase& pc, const Int& s, const Int& t) {
  ParamEval e;
  e.triple = SolutionTriple{pc.x(s, t), pc.y(s, t), pc.z(s, t)};
  e.coprime_st = gcd(s, t) == 1;
  e.conditions_ok = pc.conditions_hold(s, t);
  return e;
}

BinaryForm quartic_form(int i) {
  switch (i) {
    case 1: return BinaryForm(4, {1, 0, 0, 8, 0});
    case 2: return BinaryForm(4, {0, -4, 0, 0, 4});
    case 3: return BinaryForm(4, {1, -4, -6, -4, 1});
    case 4: return BinaryForm(4, {2, 4, 0, 4, 2});
    case 5: return BinaryForm(4, {-3, 0, 6, 0, 1});
    case 6: return BinaryForm(4, {3, 0, 6, 0, -1});
    default: throw std::out_of_range("quartic form index must be 1..6");
  }
}

namespace {
ParamId param_of(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("quartic form index must be 1..6");
  return i <= 2 ? ParamId::P1 : i <= 4 ? ParamId::P2 : ParamId::P3;
}
}  // namespace

BinaryForm quartic_form_from_param(int i) {
  const ParamCase pc = param_case(param_of(i));
  return i % 2 == 1 ? pc.y : pc.z;
}

bool quartic_conditions(int i, const Int& s, const Int& t) {
  return param_case(param_of(i)).conditions_hold(s, t);
}

CaseReport param_identity_check() {
  CaseReport r;
  r.case_id = "parametrization";
  for (const auto& pc : all_param_cases()) {
    const BinaryForm residual = pc.x * pc.x - pc.y.pow(3) - pc.z.pow(3);
    r.check(pc.name() + ": x^2 - y^3 - z^3 == 0", residual.is_zero(), residual.to_string());
  }
  for (int i = 1; i <= 6; ++i) {
    const BinaryForm listed = quartic_form(i);
    const BinaryForm derived = quartic_form_from_param(i);
    r.check("f" + std::to_string(i) + " matches its parametrization form", listed == derived,
            listed.to_string() + " vs " + derived.to_string());
  }
  return r;
}

std::vector<Reduction> reduce_main_solution(const SolutionTriple& sol, const Int& bound) {
  if (bound < 0 || bound > 100000) throw std::invalid_argument("bound must be in [0, 1e5]");
  Int z5;
  mpz_pow_ui(z5.get_mpz_t(), sol.z.get_mpz_t(), 5);
  const Int neg_y = -sol.y;
  const auto target_a = to_i128(z5);
  const auto target_b = to_i128(neg_y);
  std::vector<Reduction> out;
  if (!target_a || !target_b) return out;  // far outside any bounded window

  const std::int64_t b = bound.get_si();
  const auto cases = all_param_cases();
  for (std::int64_t s = -b; s <= b; ++s) {
    for (std::int64_t t = -b; t <= b; ++t) {
      if (std::gcd(s, t) != 1) continue;
      for (const auto& pc : cases) {
        const auto ys = pc.y.eval_checked(s, t);
        const auto zs = pc.z.eval_checked(s, t);
        if (!ys || !zs) continue;
        const bool direct = *ys == *target_a && *zs == *target_b;
        const bool swapped = *ys == *target_b && *zs == *target_a;
        if (!direct && !swapped) continue;
        const Int si(static_cast<long>(s)), ti(static_cast<long>(t));
        if (!pc.conditions_hold(si, ti)) continue;
        const int base = pc.id == ParamId::P1 ? 1 : pc.id == ParamId::P2 ? 3 : 5;
        // The form that equals z^5 is the f_i.
        if (direct) out.push_back(Reduction{base, si, ti, sol.z, pc.name(), false});
        if (swapped) out.push_back(Reduction{base + 1, si, ti, sol.z, pc.name(), true});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gfe
