#include "gfe/quadring.hpp"

#include <stdexcept>

namespace gfe {

void validate_radicand(const Int& d) {
  if (d == 0 || d == 1) throw std::invalid_argument("radicand must not be 0 or 1");
  if (squarefree_part(d) != d) throw std::invalid_argument("radicand " + d.get_str() + " is not squarefree");
  Int r = d % 4;
  if (r < 0) r += 4;
  if (r != 2 && r != 3)
    throw std::invalid_argument("radicand " + d.get_str() + " must be 2 or 3 mod 4");
}

namespace {

void same_d(const Int& x, const Int& y) {
  if (x != y) throw std::invalid_argument("quadring: mixed radicands " + x.get_str() + " and " + y.get_str());
}

std::string render(const std::string& a, const std::string& b, const Int& d) {
  return a + " + " + b + "*sqrt(" + d.get_str() + ")";
}

}  // namespace

QuadInt::QuadInt(Int d_, Int a_, Int b_) : d(std::move(d_)), a(std::move(a_)), b(std::move(b_)) {
  validate_radicand(d);
}

QuadInt QuadInt::pow(unsigned e) const {
  QuadInt r = one(d), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  same_d(x.d, y.d);
  return QuadInt(x.d, x.a + y.a, x.b + y.b);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  same_d(x.d, y.d);
  return QuadInt(x.d, x.a - y.a, x.b - y.b);
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  same_d(x.d, y.d);
  return QuadInt(x.d, x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a);
}

std::string QuadInt::to_string() const { return render(a.get_str(), b.get_str(), d); }

QuadRational::QuadRational(Int d_, Rational a_, Rational b_)
    : d(std::move(d_)), a(std::move(a_)), b(std::move(b_)) {
  validate_radicand(d);
  a.canonicalize();
  b.canonicalize();
}

QuadRational operator+(const QuadRational& x, const QuadRational& y) {
  same_d(x.d, y.d);
  return QuadRational(x.d, x.a + y.a, x.b + y.b);
}

QuadRational operator-(const QuadRational& x, const QuadRational& y) {
  same_d(x.d, y.d);
  return QuadRational(x.d, x.a - y.a, x.b - y.b);
}

QuadRational operator*(const QuadRational& x, const QuadRational& y) {
  same_d(x.d, y.d);
  return QuadRational(x.d, x.a * y.a + Rational(x.d) * x.b * y.b, x.a * y.b + x.b * y.a);
}

QuadRational operator/(const QuadRational& x, const QuadRational& y) {
  same_d(x.d, y.d);
  Rational n = y.norm();
  if (n == 0) throw std::domain_error("QuadRational: division by zero");
  QuadRational num = x * y.conj();
  return QuadRational(x.d, num.a / n, num.b / n);
}

std::string QuadRational::to_string() const { return render(a.get_str(), b.get_str(), d); }

QuadForm operator*(const QuadForm& x, const QuadForm& y) {
  same_d(x.d, y.d);
  return QuadForm{x.d, x.rational * y.rational + x.d * (x.irrational * y.irrational),
                  x.rational * y.irrational + x.irrational * y.rational};
}

QuadForm operator*(const QuadInt& c, const QuadForm& x) {
  same_d(c.d, x.d);
  return QuadForm{x.d, c.a * x.rational + (c.b * x.d) * x.irrational, c.a * x.irrational + c.b * x.rational};
}

QuadInt fundamental_unit() { return QuadInt(3, -2, 1); }

QuadInt unit_power(int j) {
  if (j < -2 || j > 2) throw std::out_of_range("unit_power: j must lie in [-2, 2]");
  // eps * (-2 - sqrt3) = 1
  const QuadInt base = j >= 0 ? fundamental_unit() : QuadInt(3, -2, -1);
  return base.pow(static_cast<unsigned>(j >= 0 ? j : -j));
}

QuinticFormPair gh_forms(int j) {
  const QuadForm linear{3, BinaryForm::first_variable(), BinaryForm::second_variable()};
  QuadForm fifth = linear;
  for (int i = 1; i < 5; ++i) fifth = fifth * linear;
  QuadForm twisted = unit_power(j) * fifth;
  return {j, twisted.rational, twisted.irrational};
}

QuinticFormPair gh_table(int j) {
  switch (j) {
    case -2:
      return {j, BinaryForm(5, {7, 60, 210, 360, 315, 108}), BinaryForm(5, {4, 35, 120, 210, 180, 63})};
    case -1:
      return {j, BinaryForm(5, {-2, -15, -60, -90, -90, -27}), BinaryForm(5, {-1, -10, -30, -60, -45, -18})};
    case 0:
      return {j, BinaryForm(5, {1, 0, 30, 0, 45, 0}), BinaryForm(5, {0, 5, 0, 30, 0, 9})};
    case 1:
      return {j, BinaryForm(5, {-2, 15, -60, 90, -90, 27}), BinaryForm(5, {1, -10, 30, -60, 45, -18})};
    case 2:
      return {j, BinaryForm(5, {7, -60, 210, -360, 315, -108}), BinaryForm(5, {-4, 35, -120, 210, -180, 63})};
    default:
      throw std::out_of_range("gh_table: j must lie in [-2, 2]");
  }
}

namespace {

Int iroot_toward_zero(const Int& n, unsigned k) {
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::optional<QuadInt> odd_root(const QuadInt& alpha, unsigned k) {
  if (k % 2 == 0) throw std::invalid_argument("odd_root: k must be odd");
  if (alpha.d < 0) throw std::invalid_argument("odd_root: real quadratic rings only");
  if (alpha.a == 0 && alpha.b == 0) return alpha;
  if (!perfect_power_root(alpha.norm(), k)) return std::nullopt;

  // Fixed-point images of alpha under both real embeddings, scaled by S^k.
  const std::size_t bits = mpz_sizeinbase(alpha.a.get_mpz_t(), 2) + mpz_sizeinbase(alpha.b.get_mpz_t(), 2) +
                           mpz_sizeinbase(alpha.d.get_mpz_t(), 2);
  const unsigned long precision = bits + 64;
  Int scale = Int(1) << precision;
  Int scale_k;
  mpz_pow_ui(scale_k.get_mpz_t(), scale.get_mpz_t(), k);
  Int irr = isqrt(alpha.d * alpha.b * alpha.b * scale_k * scale_k);
  if (alpha.b < 0) irr = -irr;
  const Int first = iroot_toward_zero(alpha.a * scale_k + irr, k);
  const Int second = iroot_toward_zero(alpha.a * scale_k - irr, k);
  const Int root_d_scaled = isqrt(alpha.d * scale * scale);

  const Int v0 = floor_div(first + second, 2 * scale);
  const Int w0 = floor_div(first - second, 2 * root_d_scaled);
  for (int dv = -1; dv <= 2; ++dv) {
    for (int dw = -1; dw <= 2; ++dw) {
      QuadInt cand(alpha.d, v0 + dv, w0 + dw);
      if (cand.pow(k) == alpha) return cand;
    }
  }
  return std::nullopt;
}

std::optional<UnitFifthPower> unit_fifth_power_decomposition(const QuadInt& alpha) {
  if (alpha.d != 3) throw std::invalid_argument("unit_fifth_power_decomposition: needs d = 3");
  for (int j = -2; j <= 2; ++j) {
    QuadInt beta = alpha * unit_power(-j);
    if (auto r = odd_root(beta, 5)) return UnitFifthPower{j, r->a, r->b};
  }
  return std::nullopt;
}

QuadRational quad_resultant(const std::vector<QuadRational>& a, const std::vector<QuadRational>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("quad_resultant: empty polynomial");
  const Int& d = a.front().d;
  return sylvester_resultant<QuadRational>(a, b, QuadRational::zero(d), QuadRational::one(d));
}

bool quad_point_on_curve(const CurveModel& c, const QuadRational& x, const QuadRational& y) {
  const Int& d = x.d;
  same_d(d, y.d);
  QuadRational fx = horner(c.rhs(), x, QuadRational::zero(d),
                           [&d](const Rational& q) { return QuadRational(d, q, 0); });
  QuadRational lhs = QuadRational(d, Rational(c.twist()), 0) * y * y;
  return lhs == fx;
}

}  // namespace gfe
