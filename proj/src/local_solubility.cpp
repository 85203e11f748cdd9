// p-adic solubility by disc refinement.
//
// A disc x0 + p^n Z_p is decided for a polynomial f once the constant term
// of f(x0 + p^n T) dominates the others: then every value in the disc has
// the same valuation and the same unit residue, so the square class is
// constant. Near a simple root (Hensel) f takes every class. Otherwise the
// disc splits into p children, up to the precision cap.

#include "gfe/hypercurve.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfe {

std::string to_string(LocalVerdict v) {
  switch (v) {
    case LocalVerdict::solvable: return "solvable";
    case LocalVerdict::insolvable: return "insolvable";
    case LocalVerdict::undecided: return "undecided";
  }
  return "?";
}

namespace {

using ZPoly = std::vector<Int>;  // low degree first

ZPoly integral_scaled(const Poly& f) {
  // Scaling by a square keeps every square class.
  const Int den = f.denominator_lcm();
  const Poly g = f * Rational(den * den);
  return g.integer_coeffs();
}

// f(x0 + T), coefficients low first.
ZPoly taylor_shift(ZPoly c, const Int& x0) {
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k-- > i;) c[k] += x0 * c[k + 1];
  return c;
}

// f reversed and padded to even degree: z^D f(1/z).
ZPoly padded_reversal(const ZPoly& f) {
  ZPoly r(f.rbegin(), f.rend());
  if ((f.size() - 1) % 2 == 1) r.insert(r.begin(), Int(0));
  return r;
}

enum class Klass { square, nonsquare, unknown };

unsigned ord_or(const Int& n, const Int& p, unsigned cap) {
  return n == 0 ? cap : std::min(ord_p(n, p), cap);
}

// Square class of f on the disc, given t = Taylor coefficients of
// f(x0 + p^n T) (already scaled by powers of p^n).
Klass classify(const ZPoly& t, const Int& p) {
  if (t.empty()) return Klass::nonsquare;  // f == 0: never a nonzero square
  if (t[0] == 0) return Klass::unknown;
  const unsigned big = 1u << 30;
  const unsigned v0 = ord_p(t[0], p);
  unsigned vmin = big;
  for (std::size_t k = 1; k < t.size(); ++k) vmin = std::min(vmin, ord_or(t[k], p, big));
  if (v0 >= vmin) return Klass::unknown;

  Int unit = t[0];
  for (unsigned i = 0; i < v0; ++i) unit /= p;
  if (p != 2) {
    if (v0 % 2 == 1) return Klass::nonsquare;
    return jacobi(unit, p) == 1 ? Klass::square : Klass::nonsquare;
  }
  if (v0 % 2 == 1) return Klass::nonsquare;
  const unsigned gap = vmin - v0;
  const Int r8 = ((unit % 8) + 8) % 8;
  if (gap >= 3) return r8 == 1 ? Klass::square : Klass::nonsquare;
  if (gap == 2 && (r8 == 3 || r8 == 7)) return Klass::nonsquare;
  return Klass::unknown;
}

// Simple root of f inside x0 + p^n Z_p, by Hensel's lemma at x0.
bool hensel_root_in_disc(const ZPoly& shifted, const Int& p, unsigned n) {
  if (shifted.size() < 2) return false;
  const Int& f0 = shifted[0];
  const Int& f1 = shifted[1];
  if (f1 == 0) return false;
  if (f0 == 0) return true;
  const unsigned a = ord_p(f0, p);
  const unsigned b = ord_p(f1, p);
  return a > 2 * b && a - b >= n;
}

struct Search {
  const std::vector<ZPoly>& polys;
  Int p;
  unsigned max_precision;

  LocalVerdict disc(const Int& x0, unsigned n) const {
    Int scale;
    mpz_pow_ui(scale.get_mpz_t(), p.get_mpz_t(), n);
    std::size_t unknown = 0, unknown_index = 0;
    bool any_nonsquare = false;
    std::vector<ZPoly> shifted(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
      shifted[i] = taylor_shift(polys[i], x0);
      ZPoly t = shifted[i];
      Int pk = 1;
      for (auto& c : t) {
        c *= pk;
        pk *= scale;
      }
      switch (classify(t, p)) {
        case Klass::nonsquare: any_nonsquare = true; break;
        case Klass::unknown:
          ++unknown;
          unknown_index = i;
          break;
        case Klass::square: break;
      }
    }
    if (any_nonsquare) return LocalVerdict::insolvable;
    if (unknown == 0) return LocalVerdict::solvable;
    if (unknown == 1 && hensel_root_in_disc(shifted[unknown_index], p, n))
      return LocalVerdict::solvable;
    if (n >= max_precision) return LocalVerdict::undecided;

    bool undecided = false;
    for (Int r = 0; r < p; ++r) {
      const LocalVerdict v = disc(x0 + r * scale, n + 1);
      if (v == LocalVerdict::solvable) return v;
      if (v == LocalVerdict::undecided) undecided = true;
    }
    return undecided ? LocalVerdict::undecided : LocalVerdict::insolvable;
  }
};

LocalVerdict combine(LocalVerdict acc, LocalVerdict v) {
  if (acc == LocalVerdict::solvable || v == LocalVerdict::solvable) return LocalVerdict::solvable;
  if (acc == LocalVerdict::undecided || v == LocalVerdict::undecided) return LocalVerdict::undecided;
  return LocalVerdict::insolvable;
}

}  // namespace

unsigned default_precision(const Poly& f, const Int& p) {
  if (f.degree() < 2) return 3;
  const Rational disc = discriminant(f);
  if (disc == 0) throw std::invalid_argument("precision: polynomial is not squarefree");
  return 2 * ord_p(disc.get_num() * disc.get_den(), p) + 3;
}

LocalVerdict jointly_square(std::span<const Poly> polys, const Int& p,
                            std::optional<unsigned> max_precision, XDomain domain) {
  if (p < 2 || !mpz_probab_prime_p(p.get_mpz_t(), 30)) throw std::invalid_argument("p must be prime");
  if (polys.empty()) return LocalVerdict::solvable;
  Poly product = Poly::constant(1);
  for (const auto& f : polys) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial in local test");
    product *= f;
  }
  const unsigned k = max_precision ? *max_precision : default_precision(product, p);

  std::vector<ZPoly> affine;
  for (const auto& f : polys) affine.push_back(integral_scaled(f));

  LocalVerdict acc = LocalVerdict::insolvable;
  const Search s{affine, p, k};
  const Int first = domain == XDomain::projective_line ? Int(0) : Int(1);
  for (Int r = first; r < p; ++r) {
    acc = combine(acc, s.disc(r, 1));
    if (acc == LocalVerdict::solvable) return acc;
  }
  if (domain != XDomain::p_adic_units) {
    std::vector<ZPoly> at_infinity;
    for (const auto& f : affine) at_infinity.push_back(padded_reversal(f));
    const Search inf{at_infinity, p, k};
    acc = combine(acc, inf.disc(0, 1));
  }
  return acc;
}

LocalVerdict locally_solvable(const CurveModel& c, const Int& p,
                              std::optional<unsigned> max_precision, XDomain domain) {
  const Poly folded = Rational(c.twist()) * c.rhs();
  const Poly one[1] = {folded};
  return jointly_square(one, p, max_precision ? max_precision : default_precision(folded, p),
                        domain);
}

// Real place: isolate the real roots of the squarefree product with a Sturm
// chain, then test one rational sample in every gap between roots.
namespace {

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    const int sg = sgn(s(x));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

bool jointly_positive_over_R(std::span<const Poly> polys) {
  Poly product = Poly::constant(1);
  for (const auto& f : polys) {
    if (f.is_zero()) return false;
    product *= f;
  }
  auto all_positive = [&](const Rational& x) {
    return std::all_of(polys.begin(), polys.end(), [&](const Poly& f) { return f(x) > 0; });
  };
  if (product.degree() < 1) return all_positive(0);

  const Poly q = exact_divide(product, gcd(product, product.derivative()));
  std::vector<Poly> chain{q, q.derivative()};
  while (chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    chain.push_back(-r);
  }

  Rational bound = 0;
  for (const auto& c : q.coeffs()) bound = std::max(bound, Rational(abs(c / q.leading())));
  bound += 1;

  std::vector<Rational> samples{-bound, bound};
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int count = sign_changes(chain, a) - sign_changes(chain, b);
    if (count <= 1) continue;
    Rational m = (a + b) / 2;
    while (q(m) == 0) m = (a + m) / 2;
    samples.push_back(m);
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  return std::any_of(samples.begin(), samples.end(), all_positive);
}

}  // namespace gfe
