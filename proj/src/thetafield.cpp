#include "gfe/thetafield.hpp"

namespace gfe {

const Poly& theta_minimal_polynomial() {
  static const Poly m{-4, 5, 0, -5, 0, 1};
  return m;
}

ThetaElt::ThetaElt(std::array<Rational, 5> coords) : c_(std::move(coords)) {
  for (auto& x : c_) x.canonicalize();
}

ThetaElt ThetaElt::from_poly(const Poly& p) {
  Poly r = p % theta_minimal_polynomial();
  std::array<Rational, 5> c{};
  for (std::size_t i = 0; i < 5; ++i) c[i] = r.coeff(i);
  return ThetaElt(c);
}

ThetaElt ThetaElt::scalar(const Rational& c) { return from_poly(Poly::constant(c)); }

ThetaElt ThetaElt::theta() { return from_poly(Poly::x()); }

ThetaElt ThetaElt::pow(unsigned e) const {
  ThetaElt r = scalar(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool ThetaElt::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

ThetaElt operator+(const ThetaElt& a, const ThetaElt& b) {
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = a.c_[i] + b.c_[i];
  return ThetaElt(c);
}

ThetaElt operator-(const ThetaElt& a, const ThetaElt& b) {
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = a.c_[i] - b.c_[i];
  return ThetaElt(c);
}

ThetaElt operator*(const ThetaElt& a, const ThetaElt& b) {
  std::vector<Rational> pa(a.c_.begin(), a.c_.end()), pb(b.c_.begin(), b.c_.end());
  return ThetaElt::from_poly(Poly(pa) * Poly(pb));
}

ThetaElt operator*(const Rational& k, const ThetaElt& a) {
  std::array<Rational, 5> c;
  for (std::size_t i = 0; i < 5; ++i) c[i] = k * a.c_[i];
  return ThetaElt(c);
}

std::string ThetaElt::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 5; ++i) s += (i ? ", " : "") + c_[i].get_str();
  return s + "]";
}

bool is_root(const Poly& f, const ThetaElt& e) {
  return horner(f, e, ThetaElt{}, [](const Rational& q) { return ThetaElt::scalar(q); }).is_zero();
}

namespace {

ThetaElt theta_poly(std::initializer_list<long> coeffs, long denominator = 1) {
  return Rational(1, denominator) * ThetaElt::from_poly(Poly(coeffs));
}

}  // namespace

const ThetaCurveData& theta_curve_data() {
  static const ThetaCurveData data{
      Poly{63, 180, 210, 120, 35, 4},
      Poly{405, 1170, 1350, 780, 225, 26},
      theta_poly({-3, -4, -5, 0, 1}, 4),
      theta_poly({-33, 4, -27, -2, 7}, 26),
      theta_poly({1, 1, -3, 2, 2}),
      theta_poly({21, -12, -10, 19, 18}, 26),
      theta_poly({13, -10, -15, 2, 3}),
      theta_poly({-9, -4, 2, 1}),
      Rational(6),
      Rational(3),
  };
  return data;
}

CaseReport verify_square_identities(const ThetaCurveData& data) {
  CaseReport r;
  r.case_id = "theta-square-identities";
  r.check("phi1 root of first quintic", is_root(data.quintic1, data.phi1), data.phi1.to_string());
  r.check("phi2 root of second quintic", is_root(data.quintic2, data.phi2), data.phi2.to_string());
  const ThetaElt minus_one = ThetaElt::scalar(-1);
  auto identity = [&](const ThetaElt& phi, const ThetaElt& mu, const ThetaElt& root, const Rational& den) {
    ThetaElt rhs = Rational(3) * mu * ((1 / (den * den)) * (root * root));
    return minus_one - phi == rhs;
  };
  r.check("-1 - phi1 = 3 mu1 (r1/6)^2", identity(data.phi1, data.mu1, data.root1, data.den1));
  r.check("-1 - phi2 = 3 mu2 (r2/3)^2", identity(data.phi2, data.mu2, data.root2, data.den2));
  r.notes.push_back("ring of integers of L = Z[theta] is assumed, not verified");
  return r;
}

std::vector<std::pair<int, unsigned>> FactorShape::shape() const {
  std::vector<std::pair<int, unsigned>> out;
  for (const auto& f : factors) out.emplace_back(f.factor.degree(), f.multiplicity);
  return out;
}

FactorShape minpoly_mod_shape(std::int64_t p, const Poly& f) {
  return FactorShape{factor_mod_p(FpPoly::reduce(f, p))};
}

std::optional<std::int64_t> minpoly_irreducible_over_Q(const Poly& f, std::int64_t limit) {
  return irreducibility_witness(f, limit);
}

CaseReport theta_identity_suite() {
  CaseReport r = verify_square_identities();
  r.case_id = "theta-field";
  r.check("theta is a root of its minimal polynomial", is_root(theta_minimal_polynomial(), ThetaElt::theta()));

  const FactorShape two = minpoly_mod_shape(2);
  const std::vector<FpFactor> expected{{FpPoly(2, {0, 1}), 1}, {FpPoly(2, {1, 1, 1}), 2}};
  bool shape_ok = two.factors.size() == expected.size();
  for (std::size_t i = 0; shape_ok && i < expected.size(); ++i)
    shape_ok = two.factors[i].factor == expected[i].factor && two.factors[i].multiplicity == expected[i].multiplicity;
  std::string detail;
  for (const auto& f : two.factors) detail += "(" + f.factor.to_string() + ")^" + std::to_string(f.multiplicity) + " ";
  r.check("minpoly = X (X^2+X+1)^2 mod 2", shape_ok, detail);

  auto witness = minpoly_irreducible_over_Q();
  r.check("minpoly irreducible over Q", witness.has_value(),
          witness ? "irreducible mod " + std::to_string(*witness) : "no witness below 100");
  return r;
}

}  // namespace gfe
