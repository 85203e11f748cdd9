#include "gfe/hypercurve.hpp"

#include "gfe/quadring.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfe {

std::pair<Poly, Poly> family_factors(int family, int j) {
  const QuinticFormPair gh = gh_forms(j);  // range-checks j
  const Poly g = gh.g.dehomogenize();
  const Poly h = gh.h.dehomogenize();
  switch (family) {
    case 3: return {g, g + Rational(2) * h};
    case 5: return {h, Rational(2) * g - Rational(3) * h};
    case 6: return {h, Rational(2) * g + Rational(3) * h};
    default: throw std::out_of_range("curve family must be 3, 5 or 6");
  }
}

CurveModel build_curve(int family, int j) {
  auto [a, b] = family_factors(family, j);
  return CurveModel(1, a * b);
}

bool model_identical(const CurveModel& a, const CurveModel& b) { return a == b; }

CurveModel twist_by(const CurveModel& c, const Int& d) {
  if (d == 0 || squarefree_part(d) != d) throw std::invalid_argument("twist must be squarefree");
  return CurveModel(1, Rational(d * c.twist()) * c.rhs());
}

bool equivalent_up_to_reflection(const CurveModel& a, const CurveModel& b) {
  const CurveModel fa = a.folded();
  const CurveModel fb = b.folded();
  return fa == fb || fa.rhs() == fb.rhs().reflect();
}

CurveModel sign_normalized(const CurveModel& c) {
  if (c.twist() > 0) return c;
  return CurveModel(-c.twist(), -c.rhs());
}

std::vector<CurvePoint> points_at_infinity(const CurveModel& c) {
  using K = CurvePoint::Kind;
  if (c.degree() % 2 == 1) return {CurvePoint::at_infinity(K::infinity)};
  if (rational_sqrt(c.rhs().leading() / Rational(c.twist())))
    return {CurvePoint::at_infinity(K::infinity_plus), CurvePoint::at_infinity(K::infinity_minus)};
  return {};
}

std::vector<Int> DescentResult::surviving_d() const {
  std::vector<Int> out;
  for (const auto& s : survivors) out.push_back(s.d);
  return out;
}

DescentResult descent_covers(const Poly& a, const Poly& b, std::span<const Int> sieve_primes,
                             bool use_real_place) {
  DescentResult res;
  res.a = a;
  res.b = b;
  res.resultant = resultant(a, b);
  if (res.resultant == 0) throw std::invalid_argument("descent factors share a root");
  const Rational n = res.resultant * a.leading() * b.leading();
  if (n.get_den() != 1) throw std::invalid_argument("descent factors must be integral");
  res.candidates = signed_squarefree_divisors(n.get_num());

  for (const Int& d : res.candidates) {
    const Poly da = Rational(d) * a;
    const Poly db = Rational(d) * b;
    const Poly pair[2] = {da, db};
    std::string killer;
    if (use_real_place && !jointly_positive_over_R(pair)) {
      killer = "R";
    } else {
      for (const Int& p : sieve_primes) {
        // Undecided counts as survival: only a proof of insolubility removes d.
        if (jointly_square(pair, p) == LocalVerdict::insolvable) {
          killer = to_string(p);
          break;
        }
      }
    }
    if (killer.empty())
      res.survivors.push_back(DescentCover{d, CurveModel(d, a), CurveModel(d, b)});
    else
      res.rejected.emplace_back(d, killer);
  }
  return res;
}

namespace {

// Value at X = infinity of f padded to even degree: lc(f) or 0.
Rational padded_value_at_infinity(const Poly& f) {
  return f.degree() % 2 == 0 ? f.leading() : Rational(0);
}

// Square class of q restricted to the primes of n, verified exactly: a point
// on Y^2 = A B has A(x) = d * square with d | n, so no other prime can appear.
Int rational_class(const Rational& q, const Int& n) {
  Int d = q < 0 ? Int(-1) : Int(1);
  for (const auto& pe : factor_small(n)) {
    const Int& p = pe.first;
    const unsigned e = ord_p(q.get_num(), p) + ord_p(q.get_den(), p);
    if (e % 2 == 1) d *= p;
  }
  if (!rational_sqrt(q / Rational(d)))
    throw std::invalid_argument("value is not in a descent class: " + to_string(q));
  return d;
}

Int descent_modulus(const Poly& a, const Poly& b) {
  const Rational n = resultant(a, b) * a.leading() * b.leading();
  return n.get_num() * n.get_den();
}

}  // namespace

Int descent_class(const Poly& a, const Poly& b, const CurvePoint& point) {
  Rational va, vb;
  if (point.is_infinite()) {
    va = padded_value_at_infinity(a);
    vb = padded_value_at_infinity(b);
  } else {
    va = a(point.x);
    vb = b(point.x);
  }
  const Int n = descent_modulus(a, b);
  if (va != 0) return rational_class(va, n);
  if (vb != 0) return rational_class(vb, n);
  throw std::invalid_argument("point is a common zero of both factors");
}

bool lifts_to_covers(const Poly& a, const Poly& b, const Int& d, const CurvePoint& point) {
  Rational va, vb;
  if (point.is_infinite()) {
    va = padded_value_at_infinity(a);
    vb = padded_value_at_infinity(b);
  } else {
    va = a(point.x);
    vb = b(point.x);
  }
  const Rational rd(d);
  return rational_sqrt(va / rd).has_value() && rational_sqrt(vb / rd).has_value();
}

bool mumford_member(const CurveModel& c, const MumfordDivisor& divisor) {
  if (c.degree() % 2 != 0) throw std::invalid_argument("Mumford check needs an even-degree model");
  if (divisor.u.is_zero() || divisor.u.leading() != 1)
    throw std::invalid_argument("Mumford u must be monic");
  if (divisor.v.degree() >= divisor.u.degree()) return false;
  const Poly diff = c.rhs() - Rational(c.twist()) * divisor.v * divisor.v;
  return (diff % divisor.u).is_zero();
}

}  // namespace gfe
