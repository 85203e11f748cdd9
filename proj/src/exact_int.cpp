#include "gfe/exact_int.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfe {

Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::optional<Int> perfect_power_root(const Int& n, unsigned k) {
  if (k < 2) throw std::invalid_argument("perfect_power_root: k must be >= 2");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  // mpz_root truncates toward zero; exactness is decided by re-powering.
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  Int back;
  mpz_pow_ui(back.get_mpz_t(), r.get_mpz_t(), k);
  if (back != n) return std::nullopt;
  return r;
}

int jacobi(const Int& a_in, const Int& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  Int n = n_in;
  Int a = a_in % n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
      result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

unsigned ord_p(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("ord_p: zero has infinite valuation");
  Int m = n;
  unsigned k = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 3) return out;
  std::vector<bool> sieve(limit, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i < limit; ++i)
    if (sieve[i])
      for (std::uint64_t j = i * i; j < limit; j += i) sieve[j] = false;
  for (std::uint64_t i = 2; i < limit; ++i)
    if (sieve[i]) out.push_back(i);
  return out;
}

std::vector<std::pair<Int, unsigned>> factor_small(const Int& n, std::uint64_t trial_limit) {
  if (n == 0) throw std::invalid_argument("factor_small: zero");
  std::vector<std::pair<Int, unsigned>> out;
  Int m = abs(n);
  for (std::uint64_t q = 2; q < trial_limit; q += (q == 2 ? 1 : 2)) {
    Int qq(static_cast<unsigned long>(q));
    if (qq * qq > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
        ++e;
      }
      out.emplace_back(qq, e);
    }
  }
  if (m > 1) {
    if (!m.fits_ulong_p() && mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
      throw std::domain_error("factor_small: cofactor " + m.get_str() + " not resolved");
    if (m.fits_ulong_p() && !is_prime(m.get_ui()))
      throw std::domain_error("factor_small: cofactor " + m.get_str() + " not resolved");
    out.emplace_back(m, 1);
  }
  return out;
}

Int squarefree_part(const Int& n) {
  if (n == 0) return 0;
  Int r = 1;
  for (const auto& [p, e] : factor_small(n))
    if (e % 2 == 1) r *= p;
  return n < 0 ? Int(-r) : r;
}

std::vector<Int> signed_squarefree_divisors(const Int& n) {
  std::vector<Int> positive{Int(1)};
  for (const auto& pe : factor_small(n)) {
    const std::size_t k = positive.size();
    for (std::size_t i = 0; i < k; ++i) positive.push_back(positive[i] * pe.first);
  }
  std::vector<Int> out;
  for (const auto& d : positive) {
    out.push_back(d);
    out.push_back(-d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational frac(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("frac: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  auto num = perfect_power_root(q.get_num(), 2);
  auto den = perfect_power_root(q.get_den(), 2);
  if (!num || !den) return std::nullopt;
  Rational r(*num, *den);
  r.canonicalize();
  return r;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rational: bad number '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace gfe
