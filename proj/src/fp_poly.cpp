#include "gfe/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfe {

namespace {

std::int64_t modp(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // p prime: a^(p-2)
  std::int64_t r = 1, b = modp(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("FpPoly: bad modulus");
  for (auto& x : c_) x = modp(x, p_);
  normalize();
}

FpPoly FpPoly::reduce(const Poly& f, std::int64_t p) {
  std::vector<std::int64_t> c;
  for (const auto& x : f.integer_coeffs()) {
    Int r = x % Int(static_cast<long>(p));
    c.push_back(r.get_si());
  }
  return FpPoly(p, std::move(c));
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  std::int64_t inv = inverse_mod(c_.back(), p_);
  std::vector<std::int64_t> c = c_;
  for (auto& x : c) x = x * inv % p_;
  return FpPoly(p_, std::move(c));
}

FpPoly FpPoly::derivative() const {
  std::vector<std::int64_t> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<std::int64_t>(i));
  return FpPoly(p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_, {});
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return FpPoly(a.p_, std::move(c));
}

bool operator<(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

std::string FpPoly::to_string() const {
  std::vector<Rational> q;
  for (auto x : c_) q.emplace_back(static_cast<long>(x));
  return Poly(std::move(q)).to_string() + " (mod " + std::to_string(p_) + ")";
}

FpDivMod divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("FpPoly divmod: zero divisor");
  const std::int64_t p = a.prime();
  std::vector<std::int64_t> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {FpPoly(p, {}), a};
  std::vector<std::int64_t> q(a.degree() - db + 1, 0);
  const std::int64_t inv = inverse_mod(b.coeffs().back(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::int64_t c = modp(r[i], p) * inv % p;
    q[i - db] = c;
    for (int k = 0; k <= db; ++k) r[i - db + k] = modp(r[i - db + k] - c * b.coeffs()[k], p);
  }
  r.resize(db);
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return x.monic();
}

std::vector<FpFactor> factor_mod_p(const FpPoly& f_in) {
  if (f_in.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
  const std::int64_t p = f_in.prime();
  FpPoly f = f_in.monic();
  std::vector<FpFactor> out;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    // all monic polynomials of degree d: p^d candidates
    std::vector<std::int64_t> c(d + 1, 0);
    c[d] = 1;
    while (true) {
      FpPoly cand(p, c);
      unsigned mult = 0;
      while (f.degree() >= d) {
        FpDivMod qr = divmod(f, cand);
        if (!qr.remainder.is_zero()) break;
        f = qr.quotient;
        ++mult;
      }
      // Smaller-degree factors were already removed, so any divisor found
      // here is irreducible.
      if (mult > 0) out.push_back({cand, mult});
      int pos = 0;
      while (pos < d && ++c[pos] == p) c[pos++] = 0;
      if (pos == d) break;
    }
  }
  if (f.degree() >= 1) out.push_back({f, 1});
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) { return a.factor < b.factor; });
  return out;
}

bool is_squarefree_mod_p(const FpPoly& f) {
  FpPoly d = f.derivative();
  if (d.is_zero()) return f.degree() <= 0;
  return gcd(f, d).degree() == 0;
}

std::optional<std::int64_t> irreducibility_witness(const Poly& f, std::int64_t limit) {
  if (f.degree() < 1) return std::nullopt;
  const Int lc = f.integer_coeffs().back();
  for (std::uint64_t q : primes_below(static_cast<std::uint64_t>(limit))) {
    const auto p = static_cast<std::int64_t>(q);
    if (lc % Int(static_cast<long>(p)) == 0) continue;
    auto factors = factor_mod_p(FpPoly::reduce(f, p));
    if (factors.size() == 1 && factors[0].multiplicity == 1 && factors[0].factor.degree() == f.degree())
      return p;
  }
  return std::nullopt;
}

}  // namespace gfe
