#pragma once

/**
 * Mordell's parametrizations of coprime solutions of x^2 = y^3 + z^3,
 * the six quartic forms f_1..f_6 they produce, and the reduction of a
 * solution of x^2 + y^3 = z^15 to some u^5 = f_i(s, t).
 *
 *   P1: x = +-(s^2 - 2st - 2t^2)(s^4 + 2s^3t + 6s^2t^2 - 4st^3 + 4t^4)
 *       y = s(s + 2t)(s^2 - 2st + 4t^2),  z = -4t(s - t)(s^2 + st + t^2)
 *       s odd, s != t mod 3
 *   P2: x = 3(s - t)(s + t)(s^4 + 2s^3t + 6s^2t^2 + 2st^3 + t^4)
 *       y = s^4 - 4s^3t - 6s^2t^2 - 4st^3 + t^4,  z = 2(s^4 + 2s^3t + 2st^3 + t^4)
 *       s != t mod 2, s != t mod 3
 *   P3: x = 6st(3s^4 + t^4),  y = -3s^4 + 6s^2t^2 + t^4,  z = 3s^4 + 6s^2t^2 - t^4
 *       s != t mod 2, t != 0 mod 3
 *
 * f_1, f_2 are the y, z forms of P1; f_3, f_4 of P2; f_5, f_6 of P3.
 */

#include "gfe/binary_form.hpp"
#include "gfe/case_report.hpp"
#include "gfe/exact_int.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace gfe {

enum class ParamId { P1, P2, P3 };

struct ParamCase {
  ParamId id = ParamId::P1;
  int sign = 1;  // the +- of P1; always +1 for P2, P3
  BinaryForm x, y, z;

  std::string name() const;
  /// The congruence side conditions (coprimality not included).
  bool conditions_hold(const Int& s, const Int& t) const;
};

/// Throws std::invalid_argument if sign is not +-1, or sign = -1 outside P1.
ParamCase param_case(ParamId id, int sign = 1);

/// The four cases P1+, P1-, P2, P3.
std::vector<ParamCase> all_param_cases();

struct SolutionTriple {
  Int x, y, z;
  friend bool operator==(const SolutionTriple&, const SolutionTriple&) = default;
  friend bool operator<(const SolutionTriple& a, const SolutionTriple& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
  }
};

bool is_pairwise_coprime(const SolutionTriple& t);
/// x^2 == y^3 + z^3
bool solves_cubic_sum(const SolutionTriple& t);
/// x^2 + y^3 == z^15
bool solves_main(const SolutionTriple& t);

struct ParamEval {
  SolutionTriple triple;
  bool coprime_st = false;     // gcd(s, t) == 1
  bool conditions_ok = false;  // congruence conditions of the case
  bool valid() const { return coprime_st && conditions_ok; }
};

/// Evaluates the case at (s, t); precondition violations are flagged, not thrown.
ParamEval param_eval(const ParamCase& c, const Int& s, const Int& t);

/// f_i as listed (i = 1..6). Throws std::out_of_range.
BinaryForm quartic_form(int i);
/// f_i taken from the y or z form of the parametrization.
BinaryForm quartic_form_from_param(int i);
/// Congruence conditions attached to f_i (those of its parametrization).
bool quartic_conditions(int i, const Int& s, const Int& t);

/// x^2 - y^3 - z^3 == 0 formally for P1+, P1-, P2, P3, and f_i agreement.
CaseReport param_identity_check();

struct Reduction {
  int i = 0;  // index of f_i with u^5 = f_i(s, t)
  Int s, t, u;
  std::string param;  // "P1+", "P1-", "P2", "P3"
  bool interchanged = false;
  friend bool operator==(const Reduction&, const Reduction&) = default;
  friend bool operator<(const Reduction& a, const Reduction& b) {
    return std::tie(a.i, a.s, a.t, a.u, a.param, a.interchanged) <
           std::tie(b.i, b.s, b.t, b.u, b.param, b.interchanged);
  }
};

/**
 * For a primitive solution of x^2 + y^3 = z^15 write x^2 = (z^5)^3 + (-y)^3
 * and search coprime (s, t), |s|, |t| <= bound, meeting a case's conditions
 * with (y_P, z_P)(s, t) equal to (z^5, -y) or to (-y, z^5). The match gives
 * u^5 = f_i(s, t) with u = z. Empty output means no match within the bound.
 */
std::vector<Reduction> reduce_main_solution(const SolutionTriple& sol, const Int& bound = 1000);

}  // namespace gfe
