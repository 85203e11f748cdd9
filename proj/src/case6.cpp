// Case 6 arguments for j = 1, 2, -2 (j = 0 and j = -1 are handled by
// descent covers and bounded point searches in the harness).

#include "gfe/case_pipeline.hpp"

#include "gfe/binary_form.hpp"
#include "gfe/catalogue.hpp"
#include "gfe/hypercurve.hpp"
#include "gfe/quadring.hpp"
#include "gfe/residue_sieve.hpp"
#include "gfe/thetafield.hpp"

#include <algorithm>
#include <numeric>

namespace gfe {

namespace {

using Vars = std::span<const Int>;

SieveArtifact run(const std::string& label, std::int64_t m, const ResidueSieve& sieve) {
  return SieveArtifact{label, m, sieve.variables, residues_mod(sieve, m)};
}

std::string count(const SieveArtifact& a) {
  return std::to_string(a.survivors.size()) + " survivors mod " + std::to_string(a.modulus);
}

const std::vector<Int> kSievePrimes{2, 3, 5, 7, 11, 13};

}  // namespace

CaseReport case6_j1_argument() {
  CaseReport r;
  r.case_id = "case6.j1";
  const QuinticFormPair gh = gh_forms(1);
  const BinaryForm lhs = Int(2) * gh.g + Int(3) * gh.h;
  const BinaryForm rhs(5, {-1, 0, -30, 0, -45, 0});
  r.check("2g1 + 3h1 = -v(v^4 + 30v^2w^2 + 45w^4)", lhs == rhs, lhs.to_string("v", "w"));

  const CatalogueEntry c61 = catalogue_entry("C6.1");
  const DescentResult dr = descent_covers(c61.split->first, c61.split->second, kSievePrimes);
  const Poly quartic{45, 0, 30, 0, 1};
  const CurveModel cover(5, quartic);
  const bool only_five = dr.surviving_d() == std::vector<Int>{5};
  r.check("partial descent on C6.1 leaves only 5Y^2 = X^4 + 30X^2 + 45",
          only_five && dr.survivors.front().cover_a == cover,
          dr.survivors.empty() ? "no survivors" : cover_display(dr.survivors.front().cover_a));
  r.curves.push_back("C6.1");
  r.curves.push_back(cover_id("C6.1", 5));

  const LocalVerdict units = locally_solvable(cover, 3, std::nullopt, XDomain::p_adic_units);
  const LocalVerdict outside = locally_solvable(cover, 3, std::nullopt, XDomain::outside_pZp);
  const LocalVerdict all = locally_solvable(cover, 3);
  r.check("no 3-adic point with ord_3(X) = 0", units == LocalVerdict::insolvable, to_string(units));
  r.check("no 3-adic point with ord_3(X) <= 0", outside == LocalVerdict::insolvable,
          to_string(outside));
  r.check("control: 3-adic points exist with 3 | X", all == LocalVerdict::solvable, to_string(all));
  r.check("control: (0, 3) lies on the cover", cover.contains(0, 3));

  ResidueSieve mod3{{"v", "w", "t"}, {}};
  mod3.constraints.push_back(congruent("2t^2 + v(v^4 + 30v^2w^2 + 45w^4)", 3, [](Vars x) -> Int {
    const Int &v = x[0], &w = x[1], &t = x[2];
    return 2 * t * t + v * (v * v * v * v + 30 * v * v * w * w + 45 * w * w * w * w);
  }));
  mod3.constraints.push_back(incongruent("t", 3, [](Vars x) -> Int { return x[2]; }));
  mod3.constraints.push_back(congruent("v", 3, [](Vars x) -> Int { return x[0]; }));
  r.sieves.push_back(run("3 | v against 3 !| t", 3, mod3));
  r.check("3 | v contradicts t != 0 mod 3", r.sieves.back().survivors.empty(),
          count(r.sieves.back()));
  r.notes.push_back("the rank-1 claim for the genus-1 cover is not verified");
  return r;
}

CaseReport case6_j2_argument(std::int64_t lemma_bound) {
  CaseReport r;
  r.case_id = "case6.j2";
  const QuinticFormPair gh = gh_forms(2);
  const BinaryForm g = gh.g, h = gh.h;
  const BinaryForm second = Int(2) * g + Int(3) * h;

  // 2s^2 + 4t^2 = h + 2(2g + 3h) = 4g + 7h
  const BinaryForm combo = Int(4) * g + Int(7) * h;
  const BinaryForm target(5, {0, 5, 0, 30, 0, 9});
  r.check("2(s^2 + 2t^2) = w(5v^4 + 30v^2w^2 + 9w^4)", combo == target, combo.to_string("v", "w"));

  // Parity of (v, w) from the pair of equations and s != t mod 2.
  auto parity_sieve = [&](std::int64_t m) {
    ResidueSieve sv{{"v", "w", "s", "t"}, {}};
    sv.constraints.push_back(congruent("2s^2 - h2(v,w)", m, [h](Vars x) -> Int {
      return 2 * x[2] * x[2] - h(x[0], x[1]);
    }));
    sv.constraints.push_back(congruent("2t^2 - (2g2 + 3h2)(v,w)", m, [second](Vars x) -> Int {
      return 2 * x[3] * x[3] - second(x[0], x[1]);
    }));
    sv.constraints.push_back(incongruent("s - t", 2, [](Vars x) -> Int { return x[2] - x[3]; }));
    return sv;
  };
  {
    ResidueSieve sv = parity_sieve(8);
    const SieveArtifact all = run("case 6, j = 2 equations", 8, sv);
    bool forced = !all.survivors.empty();
    for (const auto& tup : all.survivors) forced = forced && tup[0] % 2 == 1 && tup[1] % 2 == 0;
    r.sieves.push_back(all);
    r.check("mod 8 listing forces v odd and w even", forced, count(all));
  }

  const BinaryForm quartic(4, {5, 0, 30, 0, 9});
  auto q_sieve = [&](bool parity) {
    ResidueSieve sv{{"v", "w"}, {}};
    sv.constraints.push_back(
        incongruent("Q(v,w) - 5", 8, [quartic](Vars x) -> Int { return quartic(x[0], x[1]) - 5; }));
    if (parity) {
      sv.constraints.push_back(incongruent("v", 2, [](Vars x) -> Int { return x[0]; }));
      sv.constraints.push_back(congruent("w", 2, [](Vars x) -> Int { return x[1]; }));
    }
    return sv;
  };
  r.sieves.push_back(run("Q != 5 mod 8, v odd, w even", 8, q_sieve(true)));
  r.check("5v^4 + 30v^2w^2 + 9w^4 = 5 mod 8 for v odd, w even", r.sieves.back().survivors.empty(),
          count(r.sieves.back()));
  r.sieves.push_back(run("control: Q != 5 mod 8 without parity", 8, q_sieve(false)));
  r.check("control: without parity the residue 5 claim fails", !r.sieves.back().survivors.empty(),
          count(r.sieves.back()));

  // Divisor lemma: odd p | s^2 + 2t^2, gcd(s, t) = 1  =>  (-2/p) = 1, p = 1, 3 mod 8.
  std::size_t instances = 0;
  std::string bad;
  for (std::int64_t s = -lemma_bound; s <= lemma_bound && bad.empty(); ++s)
    for (std::int64_t t = -lemma_bound; t <= lemma_bound; ++t) {
      if (std::gcd(s, t) != 1) continue;
      const Int n = Int(static_cast<long>(s * s + 2 * t * t));
      for (const auto& [p, e] : factor_small(n)) {
        if (p == 2) continue;
        ++instances;
        const Int m8 = p % 8;
        if ((m8 != 1 && m8 != 3) || jacobi(-2, p) != 1) {
          bad = "p = " + to_string(p) + " divides s^2 + 2t^2 at (" + std::to_string(s) + ", " +
                std::to_string(t) + ")";
          break;
        }
      }
    }
  r.check("every odd prime factor of s^2 + 2t^2 (coprime |s|, |t| <= " +
              std::to_string(lemma_bound) + ") is 1 or 3 mod 8",
          bad.empty(), bad.empty() ? std::to_string(instances) + " prime factors checked" : bad);
  bool closed = true;
  for (int a : {1, 3})
    for (int b : {1, 3}) closed = closed && ((a * b) % 8 == 1 || (a * b) % 8 == 3);
  r.check("{1, 3} mod 8 is closed under products, so an odd positive divisor of s^2 + 2t^2 is 1 or 3 mod 8",
          closed);
  // Q is odd and divides 2(s^2 + 2t^2), so Q | s^2 + 2t^2; its residues under the parity:
  std::vector<std::int64_t> q_residues;
  for (int v = 1; v < 8; v += 2)
    for (int w = 0; w < 8; w += 2) {
      const Int q = quartic(v, w) % 8;
      if (std::find(q_residues.begin(), q_residues.end(), q.get_si()) == q_residues.end())
        q_residues.push_back(q.get_si());
    }
  const bool disjoint = std::none_of(q_residues.begin(), q_residues.end(),
                                     [](std::int64_t x) { return x == 1 || x == 3; });
  std::string shown;
  for (auto x : q_residues) shown += (shown.empty() ? "" : ", ") + std::to_string(x);
  r.check("contradiction: Q mod 8 avoids {1, 3}", disjoint, "Q mod 8 in {" + shown + "}");

  // The affine points of C6.2 do not come from coprime (s, t).
  const auto pts = search_points(build_curve(6, 2), 1000);
  std::string leak;
  for (const auto& p : pts) {
    if (p.is_infinite()) continue;
    const auto rel = case6_maps(p.x.get_num(), p.x.get_den(), 2);
    for (const auto& [s, t] : rel.st)
      if (gcd(s, t) == 1 && (s - t) % 2 != 0 && t % 3 != 0) leak = p.to_string();
  }
  std::string listed;
  for (const auto& p : pts) listed += (listed.empty() ? "" : " ") + p.to_string();
  r.check("points of C6.2 up to height 1000 give no admissible (s, t)", leak.empty(),
          leak.empty() ? listed : leak);
  r.curves.push_back("C6.2");
  return r;
}

CaseReport case6_jm2_argument(std::int64_t vw_bound, std::int64_t height) {
  CaseReport r;
  r.case_id = "case6.jm2";
  r.absorb(theta_identity_suite(), "theta");

  const QuinticFormPair gh = gh_forms(-2);
  const BinaryForm h = gh.h;
  const BinaryForm second = Int(2) * gh.g + Int(3) * gh.h;
  auto odd_sieve = [](const std::string& label, const BinaryForm& f, bool odd_vw) {
    ResidueSieve sv{{"v", "w"}, {}};
    sv.constraints.push_back(incongruent(label, 4, [f](Vars x) -> Int { return f(x[0], x[1]); }));
    if (odd_vw) {
      sv.constraints.push_back(incongruent("v", 2, [](Vars x) -> Int { return x[0]; }));
      sv.constraints.push_back(incongruent("w", 2, [](Vars x) -> Int { return x[1]; }));
    }
    return sv;
  };
  r.sieves.push_back(run("h_-2 != 0 mod 4, v, w odd", 4, odd_sieve("h_-2(v,w)", h, true)));
  r.check("h_-2(v, w) = 0 mod 4 for v, w odd", r.sieves.back().survivors.empty(),
          count(r.sieves.back()));
  r.sieves.push_back(
      run("2g_-2 + 3h_-2 != 0 mod 4, v, w odd", 4, odd_sieve("(2g_-2 + 3h_-2)(v,w)", second, true)));
  r.check("2g_-2 + 3h_-2 = 0 mod 4 for v, w odd", r.sieves.back().survivors.empty(),
          count(r.sieves.back()));
  r.sieves.push_back(run("control: h_-2 != 0 mod 4, any v, w", 4, odd_sieve("h_-2(v,w)", h, false)));
  r.check("control: without v, w odd the mod-4 claim fails", !r.sieves.back().survivors.empty(),
          count(r.sieves.back()));

  ResidueSieve st{{"s", "t"}, {}};
  st.constraints.push_back(congruent("2s^2", 4, [](Vars x) -> Int { return 2 * x[0] * x[0]; }));
  st.constraints.push_back(congruent("2t^2", 4, [](Vars x) -> Int { return 2 * x[1] * x[1]; }));
  st.constraints.push_back(incongruent("s - t", 2, [](Vars x) -> Int { return x[0] - x[1]; }));
  r.sieves.push_back(run("2s^2 = 2t^2 = 0 mod 4, s != t mod 2", 4, st));
  r.check("2s^2 = 2t^2 = 0 mod 4 contradicts s != t mod 2", r.sieves.back().survivors.empty(),
          count(r.sieves.back()));

  // Bounded search over (v, w).
  std::size_t pairs = 0;
  std::string hit;
  for (std::int64_t v = -vw_bound; v <= vw_bound && hit.empty(); ++v)
    for (std::int64_t w = -vw_bound; w <= vw_bound; ++w) {
      if (std::gcd(v, w) != 1) continue;
      ++pairs;
      const auto a = h.eval_checked(v, w);
      const auto b = second.eval_checked(v, w);
      if (!a || !b) {
        hit = "overflow at (" + std::to_string(v) + ", " + std::to_string(w) + ")";
        break;
      }
      if (*a < 0 || *b < 0 || (*a & 1) || (*b & 1)) continue;
      const auto rel = case6_maps(Int(static_cast<long>(v)), Int(static_cast<long>(w)), -2);
      for (const auto& [s, t] : rel.st)
        if (gcd(s, t) == 1 && (s - t) % 2 != 0 && t % 3 != 0)
          hit = "(v, w) = (" + std::to_string(v) + ", " + std::to_string(w) + ")";
    }
  r.check("no coprime (v, w) with |v|, |w| <= " + std::to_string(vw_bound) +
              " gives coprime (s, t) for j = -2",
          hit.empty(), hit.empty() ? std::to_string(pairs) + " pairs" : hit);

  const auto pts = search_points(build_curve(6, -2), Int(static_cast<long>(height)));
  const std::vector<CurvePoint> known{CurvePoint::affine_point(-1, -4),
                                      CurvePoint::affine_point(-1, 4)};
  bool subset = true;
  std::string listed;
  for (const auto& p : pts) {
    subset = subset && std::find(known.begin(), known.end(), p) != known.end();
    listed += (listed.empty() ? "" : " ") + p.to_string();
  }
  r.check("points of C6.-2 up to height " + std::to_string(height) + " lie in {(-1, -4), (-1, 4)}",
          subset, listed);
  r.curves.push_back("C6.-2");
  r.notes.push_back(
      "v and w both odd is imported from a valuation argument at the prime above 2 of "
      "multiplicity 2 in Q(theta); only its consequences are checked here");
  return r;
}

}  // namespace gfe
