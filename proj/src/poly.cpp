#include "gfe/poly.hpp"

#include <algorithm>

namespace gfe {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(Rational(1), 1); }

Poly Poly::from_ints(std::span<const Int> coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool Poly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Int> Poly::integer_coeffs() const {
  if (!is_integral()) throw std::domain_error("Poly::integer_coeffs: non-integral " + to_string());
  std::vector<Int> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return out;
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly Poly::reflect() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(1);
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.empty()) throw std::invalid_argument("Poly::parse: empty input");

  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  terms.push_back(cur);

  Poly result;
  const std::string v(var);
  for (std::string term : terms) {
    if (term.empty() || term == "+" || term == "-")
      throw std::invalid_argument("Poly::parse: malformed term in '" + std::string(text) + "'");
    Rational sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-') sign = -1;
      term.erase(0, 1);
    }
    std::size_t pos = term.find(v);
    Rational coeff = 1;
    unsigned degree = 0;
    if (pos == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string head = term.substr(0, pos);
      std::string tail = term.substr(pos + v.size());
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("Poly::parse: expected '*' in '" + term + "'");
        head.pop_back();
        coeff = parse_rational(head);
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail[0] != '^' || tail.size() < 2 ||
            !std::all_of(tail.begin() + 1, tail.end(), [](char c) { return c >= '0' && c <= '9'; }))
          throw std::invalid_argument("Poly::parse: bad exponent in '" + term + "'");
        degree = static_cast<unsigned>(std::stoul(tail.substr(1)));
      }
    }
    result += monomial(sign * coeff, degree);
  }
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational inv = 1 / b.leading();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[i] * inv;
    quo[i - db] = c;
    if (c == 0) continue;
    for (int k = 0; k <= db; ++k) rem[i - db + k] -= c * b.coeffs()[k];
  }
  rem.resize(db);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_divide(const Poly& a, const Poly& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero())
    throw std::domain_error("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
  return qr.quotient;
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

using ZPoly = std::vector<Int>;  // low degree first, normalized

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int zcontent(const ZPoly& p) {
  Int g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

Int ipow(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, over Z.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const int db = zdeg(b);
  const Int& lb = b.back();
  int e = zdeg(a) - db + 1;
  while (zdeg(a) >= db) {
    const int shift = zdeg(a) - db;
    Int la = a.back();
    for (auto& c : a) c *= lb;
    for (int k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    ztrim(a);
    --e;
  }
  Int scale = ipow(lb, static_cast<unsigned>(e));
  for (auto& c : a) c *= scale;
  return a;
}

// Subresultant algorithm for Res(A, B) over Z.
Int subresultant(ZPoly A, ZPoly B) {
  if (A.empty() || B.empty()) return 0;
  Int s = 1;
  if (zdeg(A) < zdeg(B)) {
    std::swap(A, B);
    if (zdeg(A) % 2 == 1 && zdeg(B) % 2 == 1) s = -1;
  }
  const Int a = zcontent(A);
  const Int b = zcontent(B);
  for (auto& c : A) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  for (auto& c : B) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
  const Int t = ipow(a, static_cast<unsigned>(zdeg(B))) * ipow(b, static_cast<unsigned>(zdeg(A)));
  Int g = 1, h = 1;
  while (zdeg(B) > 0) {
    const int delta = zdeg(A) - zdeg(B);
    if (zdeg(A) % 2 == 1 && zdeg(B) % 2 == 1) s = -s;
    ZPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    Int div = g * ipow(h, static_cast<unsigned>(delta));
    for (auto& c : R) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    B = std::move(R);
    g = A.back();
    // h <- g^delta / h^(delta - 1), exact
    if (delta > 0) {
      Int num = ipow(g, static_cast<unsigned>(delta));
      Int den = ipow(h, static_cast<unsigned>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  if (B.empty()) return 0;
  const int da = zdeg(A);
  // h <- lc(B)^deg(A) / h^(deg(A) - 1)
  Int num = ipow(B.back(), static_cast<unsigned>(da));
  Int out;
  if (da == 0) {
    out = num * h;
  } else {
    Int den = ipow(h, static_cast<unsigned>(da - 1));
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return s * t * out;
}

ZPoly scaled_integer(const Poly& p, Int& scale) {
  scale = p.denominator_lcm();
  ZPoly out;
  for (const auto& c : p.coeffs()) {
    Rational v = c * Rational(scale);
    out.push_back(v.get_num());
  }
  return out;
}

}  // namespace

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (a.degree() == 0 && b.degree() == 0) return 1;
  Int ca, cb;
  ZPoly A = scaled_integer(a, ca);
  ZPoly B = scaled_integer(b, cb);
  Rational r(subresultant(A, B));
  // Res(ca*a, cb*b) = ca^deg b * cb^deg a * Res(a, b)
  Rational scale(ipow(ca, static_cast<unsigned>(b.degree())) *
                 ipow(cb, static_cast<unsigned>(a.degree())));
  r /= scale;
  r.canonicalize();
  return r;
}

Rational discriminant(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
  const long n = f.degree();
  Rational d = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  d.canonicalize();
  return d;
}

}  // namespace gfe
