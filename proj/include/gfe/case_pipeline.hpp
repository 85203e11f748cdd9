#pragma once

/**
 * The case arguments for u^5 = f_i(s, t), i in {1, 2, 3, 5, 6}, as
 * finite computations: coprime factor splits, the maps to curve points,
 * congruence eliminations, and exhaustive (s, t) searches.
 *
 * Cases 3, 5 and 6 factor f_i over Z[sqrt3]; the factor coprime to its
 * conjugate is written eps^j (v + w sqrt3)^5 = g_j + h_j sqrt3 with
 * j in [-2, 2]. That unit range is taken as given (a sign -eps^j is
 * absorbed into the fifth power since 5 is odd).
 */

#include "gfe/case_report.hpp"
#include "gfe/curve_model.hpp"
#include "gfe/exact_int.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfe {

/// Case 4 is empty: f_4 is 2 * odd when s != t mod 2, so never a fifth power.
/// With require_parity = false the same sieve runs as a control.
CaseReport eliminate_f4(bool require_parity = true);

struct FactorSplit {
  Int w1, w2, w3;
  std::string scheme;  // "case1", "case2.1", "case2.2"
};

struct SplitResult {
  FactorSplit split;
  std::string curve_id;              // catalogue id of the target curve
  std::optional<CurvePoint> point;   // infinity when w1 == 0
};

/**
 * s = w1^5, s + 2t = w2^5, s^2 - 2st + 4t^2 = w3^5 and the point
 * (w3/w1^2, 4t/w1^5 - 1) on Y^2 = 4X^5 - 3.
 * Throws std::invalid_argument if the preconditions fail and
 * std::domain_error if a factor is not a fifth power.
 */
SplitResult case1_split(const Int& s, const Int& t, const Int& u);

/**
 * t odd:  t = w1^5, s - t = 8 w2^5, s^2 + st + t^2 = w3^5, point
 *         (w3/w1^2, (2s + w1^5)/w1^5) on Y^2 = 4X^5 - 3;
 * t even: t = 8 w1^5, s - t = w2^5, s^2 + st + t^2 = w3^5, point
 *         (w3/w1^2, s/w1^5 + 4) on Y^2 = X^5 - 48 (infinity when t = 0).
 * Errors as case1_split.
 */
SplitResult case2_split(const Int& s, const Int& t, const Int& u);

/// What a rational point on Y^2 = 4X^5 - 3 says about case 1.
struct Pullback {
  bool admissible = false;
  std::string reason;
  std::optional<std::pair<Int, Int>> st;  // primitive (s, t) when admissible
};

/// Y = 4t/w1^5 - 1 gives s + 2t = w1^5 (Y + 3)/2, so (Y + 3)/2 must be a
/// rational fifth power; X = infinity means w1 = 0, i.e. s = 0.
Pullback case1_pullback(const CurvePoint& point);

struct Case3Relations {
  Int g, h;
  bool g_square = false, g2h_square = false;
  std::vector<std::pair<Int, Int>> st;  // all (s, t) with (s - t)^2 = g, 2st = h
  std::optional<CurvePoint> point;      // (v/w, (s^2 - t^2)/w^5) when w != 0
  bool on_curve = false;                // the point lies on C(3, j)
};

/// (s - t)^2 = g_j(v, w), (s + t)^2 = g_j + 2 h_j and the point on C(3, j).
Case3Relations case3_reduction(const Int& v, const Int& w, int j);

struct TwiceSquareRelations {
  Int first, second;  // h_j and 2g_j -+ 3h_j
  bool both_twice_squares = false;
  std::vector<std::pair<Int, Int>> st;  // (s, t) with 2s^2 = first, 2t^2 = second
  bool curve_relation = false;          // (2st)^2 = first * second for every recovered pair
};

/// 2s^2 = h_j, 2t^2 = 2g_j - 3h_j.
TwiceSquareRelations case5_maps(const Int& v, const Int& w, int j);
/// 2s^2 = h_j, 2t^2 = 2g_j + 3h_j.
TwiceSquareRelations case6_maps(const Int& v, const Int& w, int j);

/// 3-adic argument for C(6, 1): its cover 5Y^2 = X^4 + 30X^2 + 45 has no
/// 3-adic point with ord_3(X) <= 0, so 3 | v, against 2t^2 = -v(...) mod 3.
CaseReport case6_j1_argument();

/// Case 6, j = 2: parity of (v, w) by sieve, the v^5-free combination, the
/// residue of the quartic mod 8, and the divisor lemma for s^2 + 2t^2.
CaseReport case6_j2_argument(std::int64_t lemma_bound = 200);

/// Case 6, j = -2: theta-field identities, the mod-4 contradiction for
/// v, w odd, a bounded (v, w) search, and the point search on C(6, -2).
CaseReport case6_jm2_argument(std::int64_t vw_bound = 500, std::int64_t height = 1000);

struct SolveOptions {
  unsigned workers = 1;
  bool route_structural = true;  // push each hit through its case's maps
};

/// Expected solution list of the case's proposition.
std::vector<StuSolution> expected_solutions(int i);

/**
 * All coprime (s, t), |s|, |t| <= bound, meeting the case conditions with
 * f_i(s, t) a fifth power. Hits outside expected_solutions(i) become
 * discrepancies, and so do expected solutions that were not found.
 */
CaseReport solve_case(int i, const Int& bound, const SolveOptions& options = {});

}  // namespace gfe
