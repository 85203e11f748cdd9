#pragma once

/**
 * Hyperelliptic model toolkit.
 *
 * Builds the curve families C(3,j), C(5,j), C(6,j); compares and twists
 * models; searches rational points up to a height bound; decides p-adic
 * solubility by residue enumeration with Hensel lifting; enumerates the
 * two-cover candidates of a factored model; checks Mumford divisors.
 *
 * Nothing here proves a point list complete. search_points() is a bounded
 * search and is reported as such.
 */

#include "gfe/curve_model.hpp"
#include "gfe/exact_int.hpp"
#include "gfe/poly.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gfe {

/// family 3: Y^2 = g_j (g_j + 2h_j);  family 5: Y^2 = h_j (2g_j - 3h_j);
/// family 6: Y^2 = h_j (2g_j + 3h_j); all at (X, 1). Throws std::out_of_range.
CurveModel build_curve(int family, int j);

/// The two factors (over Q) whose product is build_curve(family, j).rhs().
std::pair<Poly, Poly> family_factors(int family, int j);

/// Same twist and identical coefficients.
bool model_identical(const CurveModel& a, const CurveModel& b);

/// Twist by d (squarefree), folded: the result is Y^2 = d * twist(c) * f(X).
CurveModel twist_by(const CurveModel& c, const Int& d);

/// Folded models agree either directly or after X -> -X.
bool equivalent_up_to_reflection(const CurveModel& a, const CurveModel& b);

/// Moves a negative twist into f: |d| Y^2 = sign(d) f(X).
CurveModel sign_normalized(const CurveModel& c);

/// Points at infinity of the model (see CurvePoint for the labelling).
std::vector<CurvePoint> points_at_infinity(const CurveModel& c);

struct SearchOptions {
  unsigned workers = 1;
  /// Number of word-size primes in the quadratic-residue pre-sieve.
  unsigned sieve_primes = 24;
};

/// All points with X = p/q in lowest terms, |p| <= H, 1 <= q <= H, plus the
/// points at infinity, in canonical order. Deterministic for any worker count.
std::vector<CurvePoint> search_points(const CurveModel& c, const Int& height_bound,
                                      const SearchOptions& options = {});

enum class LocalVerdict { solvable, insolvable, undecided };
std::string to_string(LocalVerdict v);

/// Which X are allowed in a local solubility query.
enum class XDomain {
  projective_line,  // all of P^1(Q_p)
  p_adic_units,     // ord_p(X) = 0
  outside_pZp,      // ord_p(X) <= 0 or X = infinity
};

/// Default Hensel precision: 2 * ord_p(disc) + 3.
unsigned default_precision(const Poly& f, const Int& p);

/// Existence of a Q_p-point on d*Y^2 = f(X) with X in `domain`.
LocalVerdict locally_solvable(const CurveModel& c, const Int& p,
                              std::optional<unsigned> max_precision = std::nullopt,
                              XDomain domain = XDomain::projective_line);

/// Existence of one X in P^1(Q_p) (restricted to `domain`) at which every
/// polynomial takes a nonzero square value; points where one polynomial
/// vanishes are limits of such X and count. This is the local condition of
/// the fibre product of the covers d*Y_i^2 = f_i(X).
LocalVerdict jointly_square(std::span<const Poly> polys, const Int& p,
                            std::optional<unsigned> max_precision = std::nullopt,
                            XDomain domain = XDomain::projective_line);

/// Existence of a real X (or X = infinity) with every polynomial positive.
bool jointly_positive_over_R(std::span<const Poly> polys);

struct DescentCover {
  Int d;
  CurveModel cover_a;  // d * Y^2 = A(X)
  CurveModel cover_b;  // d * Y^2 = B(X)
};

struct DescentResult {
  Poly a, b;
  Rational resultant;
  std::vector<Int> candidates;
  std::vector<DescentCover> survivors;
  /// (d, place) for each rejected d: the first place that killed it, "R" or a prime.
  std::vector<std::pair<Int, std::string>> rejected;

  std::vector<Int> surviving_d() const;
};

/**
 * Partial two-descent for Y^2 = A(X) B(X). A rational point with A(x) B(x) != 0
 * has A(x) = d a^2 and B(x) = d b^2 for a squarefree d dividing
 * Res(A, B) * lc(A) * lc(B). Each candidate d (both signs) is kept unless
 * the pair of covers has no common X over R (when use_real_place) or over
 * Q_p for some sieve prime.
 */
DescentResult descent_covers(const Poly& a, const Poly& b, std::span<const Int> sieve_primes,
                             bool use_real_place = true);

/// The squarefree d whose covers contain a lift of `point` on Y^2 = A B.
Int descent_class(const Poly& a, const Poly& b, const CurvePoint& point);

/// True when the point lifts to rational points on both covers with twist d.
bool lifts_to_covers(const Poly& a, const Poly& b, const Int& d, const CurvePoint& point);

/// (f - twist * v^2) == 0 mod u for an even-degree model; throws
/// std::invalid_argument if the model has odd degree or u is not monic.
bool mumford_member(const CurveModel& c, const MumfordDivisor& divisor);

}  // namespace gfe
