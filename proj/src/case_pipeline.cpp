#include "gfe/case_pipeline.hpp"

#include "gfe/binary_form.hpp"
#include "gfe/catalogue.hpp"
#include "gfe/hypercurve.hpp"
#include "gfe/parametrization.hpp"
#include "gfe/quadring.hpp"
#include "gfe/residue_sieve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace gfe {

namespace {

Int root5_or_throw(const Int& n, const std::string& what) {
  auto r = perfect_power_root(n, 5);
  if (!r) throw std::domain_error(what + " = " + to_string(n) + " is not a fifth power");
  return *r;
}

Int pow5(const Int& n) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), n.get_mpz_t(), 5);
  return r;
}

bool odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

std::optional<Rational> rational_fifth_root(const Rational& q) {
  auto n = perfect_power_root(q.get_num(), 5);
  auto d = perfect_power_root(q.get_den(), 5);
  if (!n || !d) return std::nullopt;
  return frac(*n, *d);
}

SieveArtifact artifact(const std::string& label, std::int64_t m, const ResidueSieve& sieve) {
  return SieveArtifact{label, m, sieve.variables, residues_mod(sieve, m)};
}

}  // namespace

CaseReport eliminate_f4(bool require_parity) {
  CaseReport r;
  r.case_id = require_parity ? "case4" : "case4-control";
  const BinaryForm f4 = quartic_form(4);

  ResidueSieve fifth{{"s", "t", "u"}, {}};
  fifth.constraints.push_back(congruent("f4(s,t) - u^5", 32, [f4](std::span<const Int> x) -> Int {
    return f4(x[0], x[1]) - pow5(x[2]);
  }));
  if (require_parity)
    fifth.constraints.push_back(
        incongruent("s - t", 2, [](std::span<const Int> x) -> Int { return x[0] - x[1]; }));
  r.sieves.push_back(artifact("f4 = u^5", 32, fifth));
  const bool empty = r.sieves.back().survivors.empty();
  if (require_parity)
    r.check("no (s, t, u) mod 32 with s != t mod 2 and f4 = u^5", empty,
            std::to_string(r.sieves.back().survivors.size()) + " survivors");
  else
    r.check("without the parity condition the sieve has survivors", !empty,
            std::to_string(r.sieves.back().survivors.size()) + " survivors");

  if (require_parity) {
    ResidueSieve two_odd{{"s", "t"}, {}};
    two_odd.constraints.push_back(
        incongruent("s - t", 2, [](std::span<const Int> x) -> Int { return x[0] - x[1]; }));
    two_odd.constraints.push_back(incongruent(
        "f4(s,t) - 2", 4, [f4](std::span<const Int> x) -> Int { return f4(x[0], x[1]) - 2; }));
    r.sieves.push_back(artifact("f4 != 2 mod 4", 4, two_odd));
    r.check("f4 = 2 mod 4 whenever s != t mod 2", r.sieves.back().survivors.empty());
    const Int v = f4(1, 0);
    r.check("f4(1, 0) = 2 with ord_2 = 1", v == 2 && ord_p(v, 2) == 1, to_string(v));
  }
  return r;
}

SplitResult case1_split(const Int& s, const Int& t, const Int& u) {
  if (gcd(s, t) != 1 || !odd(s) || (s - t) % 3 == 0)
    throw std::invalid_argument("case 1 needs gcd(s, t) = 1, s odd, s != t mod 3");
  if (pow5(u) != quartic_form(1)(s, t)) throw std::invalid_argument("u^5 != f1(s, t)");
  SplitResult res;
  res.split.scheme = "case1";
  res.split.w1 = root5_or_throw(s, "s");
  res.split.w2 = root5_or_throw(s + 2 * t, "s + 2t");
  res.split.w3 = root5_or_throw(s * s - 2 * s * t + 4 * t * t, "s^2 - 2st + 4t^2");
  res.curve_id = "case1";
  const Int& w1 = res.split.w1;
  const Rational x = frac(res.split.w3, w1 * w1);
  const Rational y = frac(4 * t, pow5(w1)) - 1;
  res.point = CurvePoint::affine_point(x, y);
  if (!catalogue_entry("case1").model.contains(res.point->x, res.point->y))
    throw std::domain_error("case 1 point is not on Y^2 = 4X^5 - 3");
  return res;
}

SplitResult case2_split(const Int& s, const Int& t, const Int& u) {
  if (gcd(s, t) != 1 || !odd(s) || (s - t) % 3 == 0)
    throw std::invalid_argument("case 2 needs gcd(s, t) = 1, s odd, s != t mod 3");
  if (pow5(u) != quartic_form(2)(s, t)) throw std::invalid_argument("u^5 != f2(s, t)");
  SplitResult res;
  const Int w3 = root5_or_throw(s * s + s * t + t * t, "s^2 + st + t^2");
  if (odd(t)) {
    if ((s - t) % 8 != 0) throw std::domain_error("s - t is not divisible by 8");
    res.split = FactorSplit{root5_or_throw(t, "t"), root5_or_throw((s - t) / 8, "(s - t)/8"), w3,
                            "case2.1"};
    res.curve_id = "case2a";
    const Int& w1 = res.split.w1;
    res.point = CurvePoint::affine_point(frac(w3, w1 * w1),
                                         frac(2 * s + pow5(w1), pow5(w1)));
  } else {
    if (t % 8 != 0) throw std::domain_error("t is not divisible by 8");
    res.split = FactorSplit{root5_or_throw(t / 8, "t/8"), root5_or_throw(s - t, "s - t"), w3,
                            "case2.2"};
    res.curve_id = "case2b";
    const Int& w1 = res.split.w1;
    if (w1 == 0)
      res.point = CurvePoint::at_infinity(CurvePoint::Kind::infinity);
    else
      res.point = CurvePoint::affine_point(frac(w3, w1 * w1), frac(s, pow5(w1)) + 4);
  }
  if (!res.point->is_infinite() &&
      !catalogue_entry(res.curve_id).model.contains(res.point->x, res.point->y))
    throw std::domain_error("case 2 point is not on its curve");
  return res;
}

Pullback case1_pullback(const CurvePoint& point) {
  Pullback pb;
  if (point.is_infinite()) {
    pb.reason = "X = infinity means w1 = 0, so s = 0, but s is odd";
    return pb;
  }
  const Rational ratio = (point.y + 3) / 2;
  if (!rational_fifth_root(ratio)) {
    pb.reason = "s + 2t = w1^5 * " + to_string(ratio) + " needs " + to_string(ratio) +
                " to be a rational fifth power";
    return pb;
  }
  const Rational slope = (point.y + 1) / 4;  // t / s
  const Int s = slope.get_den(), t = slope.get_num();
  const bool fifth = perfect_power_root(quartic_form(1)(s, t), 5).has_value();
  if (!odd(s) || (s - t) % 3 == 0 || !fifth) {
    pb.reason = "(s, t) = (" + to_string(s) + ", " + to_string(t) + ") violates the case conditions";
    return pb;
  }
  pb.admissible = true;
  pb.st = std::make_pair(s, t);
  pb.reason = "t/s = " + to_string(slope);
  return pb;
}

Case3Relations case3_reduction(const Int& v, const Int& w, int j) {
  const QuinticFormPair gh = gh_forms(j);
  Case3Relations r;
  r.g = gh.g(v, w);
  r.h = gh.h(v, w);
  const Int g2h = r.g + 2 * r.h;
  r.g_square = r.g >= 0 && is_square(r.g);
  r.g2h_square = g2h >= 0 && is_square(g2h);
  if (r.g_square && r.g2h_square) {
    const Int a = *perfect_power_root(r.g, 2);
    const Int b = *perfect_power_root(g2h, 2);
    for (int ea : {1, -1})
      for (int eb : {1, -1}) {
        const Int sum = eb * b + ea * a;  // 2s
        const Int diff = eb * b - ea * a; // 2t
        if (odd(sum) || odd(diff)) continue;
        const Int s = sum / 2, t = diff / 2;
        if (2 * s * t != r.h) continue;
        const auto p = std::make_pair(s, t);
        if (std::find(r.st.begin(), r.st.end(), p) == r.st.end()) r.st.push_back(p);
      }
  }
  const CurveModel curve = build_curve(3, j);
  if (w != 0) {
    const Rational x = frac(v, w);
    std::optional<Rational> y;
    if (!r.st.empty()) {
      const auto& [s, t] = r.st.front();
      y = frac(s * s - t * t, pow5(w));
    } else if (auto root = rational_sqrt(Rational(r.g * g2h))) {
      y = *root / Rational(pow5(w));
    }
    if (y) {
      r.point = CurvePoint::affine_point(x, *y);
      r.on_curve = curve.contains(x, *y);
    }
  } else if (v != 0 && !r.st.empty()) {
    const auto& [s, t] = r.st.front();
    if (curve.degree() % 2 == 1) {
      r.point = CurvePoint::at_infinity(CurvePoint::Kind::infinity);
      r.on_curve = true;
    } else {
      const Rational slope = frac(s * s - t * t, pow5(v));  // Y / X^5 at w = 0
      r.point = CurvePoint::at_infinity(slope >= 0 ? CurvePoint::Kind::infinity_plus
                                                   : CurvePoint::Kind::infinity_minus);
      r.on_curve = slope * slope == curve.rhs().leading();
    }
  }
  return r;
}

namespace {

TwiceSquareRelations twice_square_maps(int family, const Int& v, const Int& w, int j) {
  const QuinticFormPair gh = gh_forms(j);
  TwiceSquareRelations r;
  const Int g = gh.g(v, w);
  r.first = gh.h(v, w);
  r.second = family == 5 ? Int(2 * g - 3 * r.first) : Int(2 * g + 3 * r.first);
  auto half_root = [](const Int& n) -> std::optional<Int> {
    if (n < 0 || odd(n)) return std::nullopt;
    return perfect_power_root(n / 2, 2);
  };
  const auto s0 = half_root(r.first);
  const auto t0 = half_root(r.second);
  r.both_twice_squares = s0 && t0;
  if (!r.both_twice_squares) return r;
  for (int es : {1, -1})
    for (int et : {1, -1}) {
      const auto p = std::make_pair(Int(es * *s0), Int(et * *t0));
      if (std::find(r.st.begin(), r.st.end(), p) == r.st.end()) r.st.push_back(p);
    }
  const CurveModel curve = build_curve(family, j);
  r.curve_relation = true;
  for (const auto& [s, t] : r.st) {
    const Int lhs = (2 * s * t) * (2 * s * t);
    bool ok = lhs == r.first * r.second;
    if (ok && w != 0) ok = curve.contains(frac(v, w), frac(2 * s * t, pow5(w)));
    r.curve_relation = r.curve_relation && ok;
  }
  return r;
}

}  // namespace

TwiceSquareRelations case5_maps(const Int& v, const Int& w, int j) {
  return twice_square_maps(5, v, w, j);
}

TwiceSquareRelations case6_maps(const Int& v, const Int& w, int j) {
  return twice_square_maps(6, v, w, j);
}

std::vector<StuSolution> expected_solutions(int i) {
  std::vector<StuSolution> e;
  switch (i) {
    case 1: e = {{-1, 0, 1}, {1, 0, 1}}; break;
    case 2: e = {{-1, 0, 0}, {1, 0, 0}}; break;
    case 3: e = {{-1, 0, 1}, {0, -1, 1}, {0, 1, 1}, {1, 0, 1}}; break;
    case 5: e = {{0, -1, 1}, {0, 1, 1}}; break;
    case 6: e = {{0, -1, -1}, {0, 1, -1}}; break;
    default: throw std::invalid_argument("case index must be 1, 2, 3, 5 or 6");
  }
  std::sort(e.begin(), e.end());
  return e;
}

namespace {

// The Z[sqrt3] factor of f_i written as eps^j (v + w sqrt3)^5.
QuadInt sqrt3_factor(int i, const Int& s, const Int& t) {
  switch (i) {
    case 3: return QuadInt(3, s * s - 2 * s * t + t * t, 2 * s * t);
    case 5: return QuadInt(3, 3 * s * s + t * t, 2 * s * s);
    case 6: return QuadInt(3, t * t - 3 * s * s, 2 * s * s);
    default: throw std::invalid_argument("no sqrt3 factorization for this case");
  }
}

// Pushes a hit through the case's structural map; returns a failure message or "".
std::string route(int i, const StuSolution& sol) {
  const auto& [s, t, u] = sol;
  try {
    if (i == 1) {
      const SplitResult sr = case1_split(s, t, u);
      const Pullback pb = case1_pullback(*sr.point);
      if (!pb.admissible || !pb.st) return "pullback rejects " + sr.point->to_string();
      if (!(pb.st->first == abs(s) && pb.st->second == (s > 0 ? t : Int(-t))))
        return "pullback gives a different (s, t)";
      return "";
    }
    if (i == 2) {
      case2_split(s, t, u);
      return "";
    }
    const auto dec = unit_fifth_power_decomposition(sqrt3_factor(i, s, t));
    if (!dec) return "the sqrt3 factor is not eps^j times a fifth power with |j| <= 2";
    const auto pair = std::make_pair(s, t);
    if (i == 3) {
      const Case3Relations rel = case3_reduction(dec->v, dec->w, dec->j);
      if (std::find(rel.st.begin(), rel.st.end(), pair) == rel.st.end())
        return "(s, t) not recovered from (v, w)";
      if (!rel.on_curve) return "induced point is not on C3." + std::to_string(dec->j);
      return "";
    }
    const TwiceSquareRelations rel =
        i == 5 ? case5_maps(dec->v, dec->w, dec->j) : case6_maps(dec->v, dec->w, dec->j);
    if (std::find(rel.st.begin(), rel.st.end(), pair) == rel.st.end())
      return "(s, t) not recovered from (v, w)";
    if (!rel.curve_relation) return "curve relation fails";
    return "";
  } catch (const std::exception& e) {
    return e.what();
  }
}

struct FifthPowers {
  std::vector<__int128> values;  // r^5, ascending
  std::vector<std::int64_t> roots;

  explicit FifthPowers(__int128 max_abs) {
    std::int64_t r = 0;
    auto p5 = [](std::int64_t x) {
      __int128 v = x;
      return v * v * v * v * v;
    };
    while (p5(r) <= max_abs) ++r;
    for (std::int64_t x = -r; x <= r; ++x) {
      values.push_back(p5(x));
      roots.push_back(x);
    }
  }
  std::optional<std::int64_t> root(__int128 v) const {
    auto it = std::lower_bound(values.begin(), values.end(), v);
    if (it == values.end() || *it != v) return std::nullopt;
    return roots[static_cast<std::size_t>(it - values.begin())];
  }
};

}  // namespace

CaseReport solve_case(int i, const Int& bound, const SolveOptions& options) {
  if (i == 4) throw std::invalid_argument("case 4 is handled by eliminate_f4");
  const auto expected = expected_solutions(i);  // validates i
  if (bound < 1 || bound > 100000) throw std::invalid_argument("bound must be in [1, 1e5]");
  const std::int64_t b = bound.get_si();
  const BinaryForm f = quartic_form(i);
  const ParamCase pc = param_case(i <= 2 ? ParamId::P1 : i <= 4 ? ParamId::P2 : ParamId::P3);

  __int128 max_abs = 0;
  for (const auto& c : f.coeffs()) max_abs += static_cast<__int128>(Int(abs(c)).get_si());
  max_abs *= static_cast<__int128>(b) * b * b * b;
  const FifthPowers fifth(max_abs);

  auto conditions = [&](std::int64_t s, std::int64_t t) {
    auto ne = [](std::int64_t a, std::int64_t m) { return ((a % m) + m) % m != 0; };
    switch (pc.id) {
      case ParamId::P1: return ne(s, 2) && ne(s - t, 3);
      case ParamId::P2: return ne(s - t, 2) && ne(s - t, 3);
      case ParamId::P3: return ne(s - t, 2) && ne(t, 3);
    }
    return false;
  };

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<StuSolution>> parts(workers);
  auto work = [&](unsigned w) {
    for (std::int64_t s = -b + w; s <= b; s += workers)
      for (std::int64_t t = -b; t <= b; ++t) {
        if (!conditions(s, t) || std::gcd(s, t) != 1) continue;
        const auto v = f.eval_checked(s, t);
        if (!v) throw std::overflow_error("form value overflow");
        if (auto r = fifth.root(*v))
          parts[w].push_back(StuSolution{Int(static_cast<long>(s)), Int(static_cast<long>(t)),
                                         Int(static_cast<long>(*r))});
      }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& th : threads) th.join();
  }

  CaseReport r;
  r.case_id = "case" + std::to_string(i);
  r.bound = bound;
  for (auto& part : parts) r.solutions.insert(r.solutions.end(), part.begin(), part.end());
  std::sort(r.solutions.begin(), r.solutions.end());

  bool resubstituted = true;
  for (const auto& sol : r.solutions) resubstituted = resubstituted && pow5(sol.u) == f(sol.s, sol.t);
  r.check("every hit satisfies u^5 = f" + std::to_string(i) + "(s, t)", resubstituted);

  auto text = [](const StuSolution& x) {
    return "(" + to_string(x.s) + ", " + to_string(x.t) + ", " + to_string(x.u) + ")";
  };
  for (const auto& sol : r.solutions)
    if (!std::binary_search(expected.begin(), expected.end(), sol))
      r.discrepancies.push_back("solution outside the proposition list: " + text(sol));
  for (const auto& sol : expected)
    if (sol.s <= b && sol.s >= -b && !std::binary_search(r.solutions.begin(), r.solutions.end(), sol))
      r.discrepancies.push_back("expected solution not found: " + text(sol));
  r.check("hits equal the proposition list", r.solutions == expected);

  if (options.route_structural) {
    for (const auto& sol : r.solutions) {
      const std::string err = route(i, sol);
      r.check("structural map for " + text(sol), err.empty(), err);
    }
  }
  switch (i) {
    case 1: r.curves = {"case1"}; break;
    case 2: r.curves = {"case2a", "case2b"}; break;
    default:
      for (int j = -2; j <= 2; ++j) r.curves.push_back("C" + std::to_string(i) + "." + std::to_string(j));
  }
  return r;
}

}  // namespace gfe
