// Bounded rational point search on d*Y^2 = f(X).
//
// X = p/q in lowest terms gives d*Y^2 = F(p, q) / q^D with F the
// homogenization of f to even degree D, so (p, q) yields a point iff
// d*F(p, q) is a square. For each q a residue table modulo a set of small
// primes rejects most p before the exact GMP test.

#include "gfe/hypercurve.hpp"

#include <algorithm>
#include <numeric>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace gfe {

namespace {

struct SievePrime {
  std::uint64_t ell;
  std::vector<std::uint64_t> coeffs;  // d*F coefficients mod ell, index i <-> p^i q^(D-i)
  std::vector<char> is_square;        // squares mod ell, including 0
};

std::vector<SievePrime> make_sieve(const std::vector<Int>& coeffs, unsigned count) {
  std::vector<SievePrime> out;
  for (std::uint64_t ell : primes_below(2000)) {
    if (out.size() >= count) break;
    if (ell < 3) continue;
    SievePrime sp{ell, {}, std::vector<char>(ell, 0)};
    for (const auto& c : coeffs) {
      Int r = c % Int(static_cast<unsigned long>(ell));
      if (r < 0) r += static_cast<unsigned long>(ell);
      sp.coeffs.push_back(r.get_ui());
    }
    for (std::uint64_t x = 0; x < ell; ++x) sp.is_square[(x * x) % ell] = 1;
    out.push_back(std::move(sp));
  }
  return out;
}

struct Job {
  std::vector<Int> coeffs;  // d*F, index i <-> p^i q^(D-i)
  Int twist;
  std::int64_t height;
  unsigned degree;          // D, even
  std::vector<SievePrime> sieve;
};

void search_range(const Job& job, std::int64_t q_begin, std::int64_t q_step,
                  std::vector<CurvePoint>& out) {
  const std::int64_t h = job.height;
  const unsigned D = job.degree;
  std::vector<std::vector<char>> allowed(job.sieve.size());
  for (std::int64_t q = q_begin; q <= h; q += q_step) {
    // Residue table of p -> d*F(p, q) mod ell.
    for (std::size_t k = 0; k < job.sieve.size(); ++k) {
      const auto& sp = job.sieve[k];
      const std::uint64_t ell = sp.ell;
      const std::uint64_t qm = static_cast<std::uint64_t>(q) % ell;
      std::vector<std::uint64_t> qpow(D + 1, 1);
      for (unsigned i = 1; i <= D; ++i) qpow[i] = qpow[i - 1] * qm % ell;
      auto& table = allowed[k];
      table.assign(ell, 0);
      for (std::uint64_t r = 0; r < ell; ++r) {
        std::uint64_t acc = 0;
        for (unsigned i = D + 1; i-- > 0;) acc = (acc * r + sp.coeffs[i] * qpow[D - i]) % ell;
        table[r] = sp.is_square[acc];
      }
    }
    Int qz(static_cast<long>(q));
    std::vector<Int> qpow(D + 1, Int(1));
    for (unsigned i = 1; i <= D; ++i) qpow[i] = qpow[i - 1] * qz;
    const Int& qhalf = qpow[D / 2];
    for (std::int64_t p = -h; p <= h; ++p) {
      if (std::gcd(p, q) != 1) continue;
      bool pass = true;
      for (std::size_t k = 0; k < job.sieve.size() && pass; ++k) {
        const std::int64_t ell = static_cast<std::int64_t>(job.sieve[k].ell);
        pass = allowed[k][static_cast<std::size_t>(((p % ell) + ell) % ell)];
      }
      if (!pass) continue;
      Int pz(static_cast<long>(p));
      Int value = 0;
      for (unsigned i = D + 1; i-- > 0;) value = value * pz + job.coeffs[i] * qpow[D - i];
      if (value < 0) continue;
      auto root = perfect_power_root(value, 2);
      if (!root) continue;
      // d*Y^2 = value / q^D with (dY)^2 = d*value / q^D, root^2 = d*value.
      const Rational x(pz, qz);
      Rational y(*root, job.twist * qhalf);
      y.canonicalize();
      out.push_back(CurvePoint::affine_point(x, y));
      if (y != 0) out.push_back(CurvePoint::affine_point(x, -y));
    }
  }
}

}  // namespace

std::vector<CurvePoint> search_points(const CurveModel& c, const Int& height_bound,
                                      const SearchOptions& options) {
  if (height_bound < 1 || !height_bound.fits_slong_p() || height_bound > 1000000000)
    throw std::invalid_argument("height bound must be in [1, 1e9]");
  Job job;
  job.twist = c.twist();
  job.height = height_bound.get_si();
  job.degree = static_cast<unsigned>(c.degree() + c.degree() % 2);
  const auto f = c.rhs().integer_coeffs();
  job.coeffs.assign(job.degree + 1, Int(0));
  for (std::size_t i = 0; i < f.size(); ++i) job.coeffs[i] = f[i] * c.twist();
  job.sieve = make_sieve(job.coeffs, options.sieve_primes);

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::vector<CurvePoint>> parts(workers);
  if (workers == 1) {
    search_range(job, 1, 1, parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w)
      threads.emplace_back(search_range, std::cref(job), 1 + static_cast<std::int64_t>(w),
                           static_cast<std::int64_t>(workers), std::ref(parts[w]));
    for (auto& t : threads) t.join();
  }

  std::vector<CurvePoint> points = points_at_infinity(c);
  for (auto& part : parts) points.insert(points.end(), part.begin(), part.end());
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace gfe
