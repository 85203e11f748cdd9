#include "gfe/binary_form.hpp"
#include "gfe/fp_poly.hpp"
#include "gfe/poly.hpp"
#include "gfe/residue_sieve.hpp"

#include <doctest.h>

using namespace gfe;

TEST_SUITE("polyforms") {

TEST_CASE("poly arithmetic and evaluation") {
  const Poly f{1, 2, 3};  // 1 + 2X + 3X^2
  const Poly g{-1, 1};
  CHECK((f * g).coeffs() == std::vector<Rational>{-1, -1, -1, 3});
  CHECK(f(2) == 17);
  CHECK(f(Rational(1, 3)) == Rational(2));
  CHECK((f - f).is_zero());
  CHECK(f.derivative() == Poly{2, 6});
  CHECK(Poly{0, 1, 0, 0}.degree() == 1);
  CHECK(f.reflect() == Poly{1, -2, 3});
}

TEST_CASE("division with remainder reconstructs the dividend") {
  const Poly a{5, -3, 0, 2, 7};
  const Poly b{1, 0, 3};
  const DivMod q = divmod(a, b);
  CHECK(q.quotient * b + q.remainder == a);
  CHECK(q.remainder.degree() < b.degree());
  CHECK_THROWS_AS(divmod(a, Poly{}), std::domain_error);
  CHECK_THROWS_AS(exact_divide(a, b), std::domain_error);
  CHECK(exact_divide(a * b, b) == a);
  CHECK(gcd(Poly{-1, 0, 1}, Poly{1, 2, 1}) == Poly{1, 1});
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  const Poly a{3, -1, 0, 2};
  const Poly b{-7, 4, 5};
  const Rational r = resultant(a, b);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  const Rational s = sylvester_resultant<Rational>(ca, cb, Rational(0), Rational(1));
  CHECK(r == s);
  // Res(X - 2, X - 5) = 2 - 5
  CHECK(resultant(Poly{-2, 1}, Poly{-5, 1}) == -3);
  CHECK(resultant(Poly{-1, 0, 1}, Poly{-1, 1}) == 0);
}

TEST_CASE("discriminants of quadratics and cubics") {
  CHECK(discriminant(Poly{3, 5, 1}) == 25 - 12);
  CHECK(discriminant(Poly{1, -1, 0, 1}) == -23);  // X^3 - X + 1: -4p^3 - 27q^2
  CHECK(discriminant(Poly{-2, 0, 1}) == 8);
}

TEST_CASE("text round trip") {
  const Poly f(std::vector<Rational>{Rational(-3, 4), 0, 5, Rational(1, 7)});
  CHECK(Poly::parse(f.to_string()) == f);
  CHECK(Poly::parse("2 - X^2") == Poly{2, 0, -1});
}

TEST_CASE("binary forms") {
  const BinaryForm s = BinaryForm::first_variable(), t = BinaryForm::second_variable();
  const BinaryForm f = s * s - Int(3) * t * t;
  CHECK(f == BinaryForm(2, {1, 0, -3}));
  CHECK(f(1, 1) == -2);
  CHECK(f.dehomogenize() == Poly{-3, 0, 1});
  CHECK(BinaryForm::homogenize(Poly{-3, 0, 1}, 2) == f);
  CHECK(BinaryForm::homogenize(Poly{1, 1}, 3) == BinaryForm(3, {0, 0, 1, 1}));
  const BinaryForm g(3, {1, 2, 3, 4});
  CHECK(g.negate_second() == BinaryForm(3, {1, -2, 3, -4}));
  CHECK(g.negate_first() == BinaryForm(3, {-1, 2, -3, 4}));
  CHECK(g.pow(2) == g * g);
  CHECK_THROWS_AS(BinaryForm(2, {1, 2}), std::invalid_argument);
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b) CHECK(*g.eval_checked(a, b) == g(a, b).get_si());
  const BinaryForm big = BinaryForm(1, {1, 0}).pow(5);
  CHECK_FALSE(big.eval_checked(std::int64_t(1) << 40, 1));
}

TEST_CASE("factorization mod p") {
  // X^5 - 5X^3 + 5X - 4 = X (X^2 + X + 1)^2 mod 2
  const FpPoly m = FpPoly::reduce(Poly{-4, 5, 0, -5, 0, 1}, 2);
  const auto f = factor_mod_p(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == FpPoly(2, {0, 1}));
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].factor == FpPoly(2, {1, 1, 1}));
  CHECK(f[1].multiplicity == 2);
  CHECK_FALSE(is_squarefree_mod_p(m));
  // the product of the factors gives back the polynomial
  FpPoly prod(2, {1});
  for (const auto& x : f)
    for (unsigned i = 0; i < x.multiplicity; ++i) prod = prod * x.factor;
  CHECK(prod == m.monic());
  CHECK(irreducibility_witness(Poly{1, 0, 1}) == 3);  // (X + 1)^2 mod 2, irreducible mod 3
  CHECK_FALSE(irreducibility_witness(Poly{-1, 0, 1}));
}

TEST_CASE("residue sieve agrees with brute force") {
  ResidueSieve sv{{"a", "b"}, {}};
  sv.constraints.push_back(congruent("a^2 + b^2 - 1", 8, [](std::span<const Int> x) -> Int {
    return x[0] * x[0] + x[1] * x[1] - 1;
  }));
  sv.constraints.push_back(incongruent("a", 2, [](std::span<const Int> x) -> Int { return x[0]; }));
  const auto got = residues_mod(sv, 8);
  std::vector<ResidueTuple> want;
  for (std::int64_t a = 0; a < 8; ++a)
    for (std::int64_t b = 0; b < 8; ++b)
      if ((a * a + b * b - 1) % 8 == 0 && a % 2 == 1) want.push_back({a, b});
  CHECK(got == want);
  CHECK_THROWS_AS(residues_mod(sv, 12), std::invalid_argument);   // 8 does not divide 12
  CHECK_THROWS_AS(residues_mod(sv, 256), std::invalid_argument);  // above the cap
  CHECK(describe(sv) == "vars(a,b); a^2 + b^2 - 1 == 0 mod 8; a != 0 mod 2");
}

}  // TEST_SUITE
