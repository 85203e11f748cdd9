#include "gfe/harness.hpp"

#include "gfe/case_pipeline.hpp"
#include "gfe/catalogue.hpp"
#include "gfe/hypercurve.hpp"
#include "gfe/quadring.hpp"
#include "gfe/thetafield.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace gfe {

namespace {

Int json_int(const nlohmann::json& v, const std::string& key) {
  if (v.is_number_integer()) return Int(v.get<long>());
  if (v.is_string()) return Int(v.get<std::string>());
  throw std::invalid_argument("config: " + key + " must be an integer or a decimal string");
}

const Int kMaxY = Int("1000000000");
const Int kMaxZ = 10;

std::string triple_text(const SolutionTriple& t) {
  return "(" + t.x.get_str() + ", " + t.y.get_str() + ", " + t.z.get_str() + ")";
}

bool in_window(const SolutionTriple& t, const Int& y_bound, const Int& z_bound) {
  return abs(t.y) <= y_bound && abs(t.z) <= z_bound;
}

CurvePoint inf(CurvePoint::Kind k) { return CurvePoint::at_infinity(k); }
CurvePoint pt(long x, long y) { return CurvePoint::affine_point(x, y); }

template <class F>
auto timed(std::vector<Timing>& log, const std::string& stage, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  log.push_back({stage, dt.count()});
  return result;
}

}  // namespace

void RunConfig::validate() const {
  for (const auto& [name, v] : {std::pair{"y_bound", &y_bound}, {"z_bound", &z_bound},
                                {"st_bound", &st_bound}, {"height_bound", &height_bound}})
    if (*v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
  if (workers == 0) throw std::invalid_argument("workers must be >= 1");
  for (const auto& p : sieve_primes)
    if (p < 2 || !p.fits_ulong_p() || !is_prime(p.get_ui()))
      throw std::invalid_argument("sieve prime " + p.get_str() + " is not prime");
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig cfg) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "y_bound") cfg.y_bound = json_int(v, key);
    else if (key == "z_bound") cfg.z_bound = json_int(v, key);
    else if (key == "st_bound") cfg.st_bound = json_int(v, key);
    else if (key == "height_bound") cfg.height_bound = json_int(v, key);
    else if (key == "workers") {
      if (!v.is_number_unsigned()) throw std::invalid_argument("config: workers must be a positive integer");
      cfg.workers = v.get<unsigned>();
    } else if (key == "sieve_primes") {
      if (!v.is_array()) throw std::invalid_argument("config: sieve_primes must be a list");
      cfg.sieve_primes.clear();
      for (const auto& p : v) cfg.sieve_primes.push_back(json_int(p, key));
    } else if (key == "output_path") {
      if (!v.is_string()) throw std::invalid_argument("config: output_path must be a string");
      cfg.output_path = v.get<std::string>();
    } else {
      throw std::invalid_argument("config: unknown key " + key);
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("config file " + path + ": " + e.what());
  }
  return config_from_json(j, std::move(base));
}

nlohmann::json to_json(const RunConfig& cfg) {
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& p : cfg.sieve_primes) primes.push_back(p.get_str());
  return {{"y_bound", cfg.y_bound.get_str()},
          {"z_bound", cfg.z_bound.get_str()},
          {"st_bound", cfg.st_bound.get_str()},
          {"height_bound", cfg.height_bound.get_str()},
          {"sieve_primes", primes},
          {"workers", cfg.workers},
          {"output_path", cfg.output_path}};
}

nlohmann::json to_json(const SolutionTriple& t) {
  return nlohmann::json::array({t.x.get_str(), t.y.get_str(), t.z.get_str()});
}

std::vector<SolutionTriple> known_solutions() {
  std::vector<SolutionTriple> v{{1, -1, 0}, {-1, -1, 0}, {1, 0, 1},  {-1, 0, 1},
                                {0, 1, 1},  {0, -1, -1}, {3, -2, 1}, {-3, -2, 1}};
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<SolutionTriple> known_in_window(const Int& y_bound, const Int& z_bound) {
  std::vector<SolutionTriple> v;
  for (const auto& t : known_solutions())
    if (in_window(t, y_bound, z_bound)) v.push_back(t);
  return v;
}

std::vector<SolutionTriple> primitive_solutions(const Int& y_bound, const Int& z_bound,
                                                unsigned workers) {
  if (y_bound < 0 || z_bound < 0) throw std::invalid_argument("bounds must be >= 0");
  if (y_bound > kMaxY || z_bound > kMaxZ)
    throw std::invalid_argument("end-to-end window too large (|y| <= 10^9, |z| <= 10)");
  workers = std::max(1u, workers);
  const long Y = y_bound.get_si(), Z = z_bound.get_si();
  std::vector<Int> z15;
  for (long z = -Z; z <= Z; ++z) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), Int(z).get_mpz_t(), 15);
    z15.push_back(p);
  }

  std::vector<std::vector<SolutionTriple>> found(workers);
  auto work = [&](unsigned w) {
    Int cube, rest, root;
    for (long y = -Y + static_cast<long>(w); y <= Y; y += workers) {
      const Int yy = y;
      cube = yy * yy * yy;
      for (long z = -Z; z <= Z; ++z) {
        rest = z15[z + Z] - cube;
        if (rest < 0 || !mpz_perfect_square_p(rest.get_mpz_t())) continue;
        mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
        const Int zz = z;
        if (gcd(root, yy) != 1 || gcd(root, zz) != 1 || gcd(yy, zz) != 1) continue;
        found[w].push_back({root, yy, zz});
        if (root != 0) found[w].push_back({Int(-root), yy, zz});
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::vector<SolutionTriple> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<SolutionTriple> lift_case_solution(int i, const StuSolution& stu) {
  if (i < 1 || i > 6) throw std::out_of_range("case index must be 1..6");
  std::vector<ParamCase> cases;
  if (i <= 2) cases = {param_case(ParamId::P1, 1), param_case(ParamId::P1, -1)};
  else if (i <= 4) cases = {param_case(ParamId::P2)};
  else cases = {param_case(ParamId::P3)};

  Int u5;
  mpz_pow_ui(u5.get_mpz_t(), stu.u.get_mpz_t(), 5);
  std::set<SolutionTriple> out;
  for (const auto& pc : cases) {
    const ParamEval e = param_eval(pc, stu.s, stu.t);
    if (!e.valid()) continue;
    // f_i is the y form of the parametrization for odd i and the z form for even i;
    // that form equals z^5 and the other equals -y.
    const bool odd_i = i % 2 == 1;
    const Int& fifth = odd_i ? e.triple.y : e.triple.z;
    const Int& other = odd_i ? e.triple.z : e.triple.y;
    if (fifth != u5) continue;
    for (const Int& x : {e.triple.x, Int(-e.triple.x)}) {
      SolutionTriple t{x, -other, stu.u};
      if (is_pairwise_coprime(t) && solves_main(t)) out.insert(t);
    }
  }
  return {out.begin(), out.end()};
}

std::optional<std::vector<CurvePoint>> published_points(const std::string& id) {
  using K = CurvePoint::Kind;
  std::vector<CurvePoint> pts;
  if (id == "case1" || id == "case2a") pts = {inf(K::infinity), pt(1, 1), pt(1, -1)};
  else if (id == "case2b" || id == "C3.1" || id == "C5.0" || id == "C6.0") pts = {inf(K::infinity)};
  else if (id == "C3.0" || id == "C5.-1") pts = {inf(K::infinity_plus), inf(K::infinity_minus), pt(0, 0)};
  else if (id == "C3.-2" || id == "C3.-1" || id == "C3.2" || id == "C5.-2" || id == "C5.1" ||
           id == "C5.2" || id == "C6.-1")
    pts = {};
  else if (id == "C6.-2") pts = {pt(-1, 4), pt(-1, -4)};
  else return std::nullopt;
  std::sort(pts.begin(), pts.end());
  return pts;
}

CurveInventory curve_inventory(const std::string& id, const Int& height, unsigned workers) {
  const CatalogueEntry e = catalogue_entry(id);
  CurveInventory inv;
  inv.id = id;
  inv.height = height;
  inv.points = search_points(e.model, height, SearchOptions{std::max(1u, workers), 24});
  inv.expected = published_points(id);
  return inv;
}

nlohmann::json to_json(const CurveInventory& inv) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : inv.points) pts.push_back(p.to_string());
  nlohmann::json expected = nullptr;
  if (inv.expected) {
    expected = nlohmann::json::array();
    for (const auto& p : *inv.expected) expected.push_back(p.to_string());
  }
  return {{"curve", inv.id},
          {"height", inv.height.get_str()},
          {"points", pts},
          {"published", expected},
          {"consistent", inv.consistent()}};
}

CaseReport verify_identities() {
  CaseReport r;
  r.case_id = "identities";
  r.absorb(param_identity_check(), "param");

  const BinaryForm norm_base = BinaryForm(2, {1, 0, -3}).pow(5);  // (v^2 - 3w^2)^5
  const Int n_eps = fundamental_unit().norm();
  r.check("norm of sqrt3 - 2 is +1", n_eps == 1, to_string(n_eps));
  for (int j = -2; j <= 2; ++j) {
    const QuinticFormPair table = gh_table(j), expanded = gh_forms(j);
    const std::string js = std::to_string(j);
    r.check("g_" + js + ", h_" + js + " table = expansion of eps^j (v + w sqrt3)^5",
            table == expanded, table.g.to_string("v", "w") + " | " + table.h.to_string("v", "w"));
    const BinaryForm lhs = table.g * table.g - Int(3) * table.h * table.h;
    Int sign = 1;
    for (int k = 0; k < std::abs(j); ++k) sign *= n_eps;
    r.check("g_" + js + "^2 - 3h_" + js + "^2 = N(eps)^j (v^2 - 3w^2)^5", lhs == sign * norm_base);
    // The sign (-1)^j, as if N(eps) were -1, must hold exactly for even j only.
    const bool literal = lhs == Int(j % 2 == 0 ? 1 : -1) * norm_base;
    r.check("(-1)^" + js + " sign variant holds iff j is even", literal == (j % 2 == 0),
            literal ? "holds" : "fails");
  }
  {
    const auto g = [](int j) { return gh_table(j).g; };
    const auto h = [](int j) { return gh_table(j).h; };
    r.check("g_1(v, w) = g_-1(v, -w)", g(1) == g(-1).negate_second());
    r.check("g_2(v, w) = g_-2(v, -w)", g(2) == g(-2).negate_second());
    r.check("h_1(v, w) = h_-1(-v, w)", h(1) == h(-1).negate_first());
    r.check("h_2(v, w) = h_-2(-v, w)", h(2) == h(-2).negate_first());
    const BinaryForm combo = Int(2) * g(1) + Int(3) * h(1);
    r.check("2g_1 + 3h_1 = -v(v^4 + 30v^2w^2 + 45w^4)",
            combo == BinaryForm(5, {-1, 0, -30, 0, -45, 0}), combo.to_string("v", "w"));
  }
  r.absorb(theta_identity_suite(), "theta");

  r.check("C5.0 and C3.1 models are identical", model_identical(build_curve(5, 0), build_curve(3, 1)));
  r.check("C5.-1 and C3.0 models are identical",
          model_identical(build_curve(5, -1), build_curve(3, 0)));
  for (int j = -2; j <= 2; ++j)
    r.check("C6." + std::to_string(j) + " = (-1)-twist of C5." + std::to_string(-j) +
                " (up to X -> -X)",
            equivalent_up_to_reflection(twist_by(build_curve(5, -j), -1), build_curve(6, j)));

  {
    // X^2 - 2(1 +- sqrt3) X + 1, low degree first
    const QuadRational one(3, 1, 0);
    const std::vector<QuadRational> p{one, QuadRational(3, -2, -2), one};
    const std::vector<QuadRational> q{one, QuadRational(3, -2, 2), one};
    const QuadRational res = quad_resultant(p, q);
    r.check("resultant of the f3 factors over Q(sqrt3) = 48", res == QuadRational(3, 48, 0),
            res.to_string());
  }

  const Poly quartic{45, 0, 30, 0, 1};
  const Poly quintic{18, 45, 60, 30, 10, 1};
  const CurveModel c30 = build_curve(3, 0);
  r.check("C3.0: Y^2 = X (X^4 + 30X^2 + 45)(X^5 + 10X^4 + 30X^3 + 60X^2 + 45X + 18)",
          c30 == CurveModel(1, Poly::x() * quartic * quintic), c30.to_string());

  {
    const MumfordDivisor d1{quartic, Poly{}};
    const MumfordDivisor d3{
        Poly(std::vector<Rational>{frac(81, 5), frac(72, 5), 14, frac(8, 5), 1}),
        Poly(std::vector<Rational>{frac(1152, 25), frac(1304, 25), 32, frac(-264, 25)})};
    r.check("D1 = (X^4 + 30X^2 + 45, 0) lies on J(C3.0)", mumford_member(c30, d1));
    r.check("D2: (0, 0) lies on C3.0", c30.contains(0, 0));
    r.check("D3 lies on J(C3.0)", mumford_member(c30, d3));
    const MumfordDivisor bent{d3.u, d3.v + Poly{1}};
    r.check("control: D3 with v + 1 is rejected", !mumford_member(c30, bent));
  }

  {
    const CurveModel c1 = catalogue_entry("case1").model;
    const QuadRational i(-1, 0, 1);
    const QuadRational yi(-1, 1, 2);
    r.check("(i, 2i + 1) lies on Y^2 = 4X^5 - 3", quad_point_on_curve(c1, i, yi));
    r.check("(-i, -2i + 1) lies on Y^2 = 4X^5 - 3", quad_point_on_curve(c1, i.conj(), yi.conj()));
    r.check("control: (i, 2i - 1) does not", !quad_point_on_curve(c1, i, QuadRational(-1, -1, 2)));
    const CurveModel c2 = catalogue_entry("case2b").model;
    const QuadRational x2(2, 6, 2), y2(2, 124, 76);
    r.check("(6 + 2sqrt2, 124 + 76sqrt2) lies on Y^2 = X^5 - 48", quad_point_on_curve(c2, x2, y2));
    r.check("(6 - 2sqrt2, 124 - 76sqrt2) lies on Y^2 = X^5 - 48",
            quad_point_on_curve(c2, x2.conj(), y2.conj()));
    r.check("control: (6 + 2sqrt2, 124 - 76sqrt2) does not",
            !quad_point_on_curve(c2, x2, y2.conj()));
  }
  return r;
}

CaseReport covers_report(const std::string& id, std::span<const Int> primes) {
  const CatalogueEntry e = catalogue_entry(id);
  if (!e.split) throw std::invalid_argument(id + " has no factorization for a descent");
  CaseReport r;
  r.case_id = "covers:" + id;
  r.curves.push_back(id);
  const DescentResult dr = descent_covers(e.split->first, e.split->second, primes);

  std::string cands;
  for (const auto& d : dr.candidates) cands += (cands.empty() ? "" : " ") + d.get_str();
  r.notes.push_back("A = " + dr.a.to_string() + ", B = " + dr.b.to_string() +
                    ", Res = " + to_string(dr.resultant));
  r.notes.push_back("candidates d: " + cands);
  for (const auto& [d, place] : dr.rejected)
    r.notes.push_back("d = " + d.get_str() + " killed at " + place);
  for (const auto& c : dr.survivors) {
    r.notes.push_back("d = " + c.d.get_str() + " survives: " + cover_display(c.cover_a) + " and " +
                      cover_display(c.cover_b));
    r.curves.push_back(cover_id(id, c.d));
  }

  // Published covers, compared after moving the sign of d into f.
  const Poly c31{-27, 90, -90, 60, -15, 2};
  const Poly c30 = Poly::x() * Poly{18, 45, 60, 30, 10, 1};
  std::vector<CurveModel> published;
  if (id == "C3.1") published = {CurveModel(1, c31), CurveModel(5, c31)};
  else if (id == "C3.0") published = {CurveModel(1, c30), CurveModel(5, c30)};
  else if (id == "C6.0") published = {CurveModel(1, Poly{135, 450, 450, 300, 75, 10})};
  else if (id == "C6.1") published = {CurveModel(5, Poly{45, 0, 30, 0, 1})};
  else return r;

  std::vector<CurveModel> got;
  for (const auto& c : dr.survivors) got.push_back(sign_normalized(c.cover_a));
  auto same = [](const CurveModel& a, const CurveModel& b) {
    return a == b || a.folded() == b.folded();
  };
  bool match = got.size() == published.size();
  for (const auto& p : published)
    match = match && std::any_of(got.begin(), got.end(), [&](const CurveModel& g) { return same(g, p); });
  std::string shown, want;
  for (const auto& g : got) shown += (shown.empty() ? "" : "; ") + cover_display(g);
  for (const auto& p : published) want += (want.empty() ? "" : "; ") + cover_display(p);
  r.check("surviving covers of " + id + " are the published ones", match,
          "got " + shown + " / published " + want);
  return r;
}

CaseReport local_report(const std::string& id, const Int& p) {
  const CatalogueEntry e = catalogue_entry(id);
  CaseReport r;
  r.case_id = "local:" + id + ":p=" + p.get_str();
  r.curves.push_back(id);
  const LocalVerdict v = locally_solvable(e.model, p);
  r.notes.push_back(e.model.to_string() + " over Q_" + p.get_str() + ": " + to_string(v));
  return r;
}

bool VerificationReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.ok(); }) &&
         std::all_of(inventories.begin(), inventories.end(),
                     [](const CurveInventory& i) { return i.consistent(); });
}

std::vector<std::string> VerificationReport::discrepancies() const {
  std::vector<std::string> out;
  for (const auto& c : cases) {
    for (const auto& d : c.discrepancies) out.push_back(c.case_id + ": " + d);
    for (const auto& k : c.checks)
      if (!k.passed) out.push_back(c.case_id + ": check failed: " + k.name);
  }
  for (const auto& inv : inventories)
    if (!inv.consistent())
      out.push_back(inv.id + ": points up to height " + inv.height.get_str() +
                    " differ from the published list");
  return out;
}

VerificationReport end_to_end_search(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport rep;
  rep.config = cfg;
  rep.found_solutions = timed(rep.timings, "end-to-end", [&] {
    return primitive_solutions(cfg.y_bound, cfg.z_bound, cfg.workers);
  });

  CaseReport r;
  r.case_id = "end-to-end";
  r.bound = cfg.y_bound;
  r.notes.push_back("window |y| <= " + cfg.y_bound.get_str() + ", |z| <= " + cfg.z_bound.get_str());
  const auto expected = known_in_window(cfg.y_bound, cfg.z_bound);
  for (const auto& t : rep.found_solutions) {
    if (!solves_main(t) || !is_pairwise_coprime(t))
      r.discrepancies.push_back("reported triple fails re-substitution: " + triple_text(t));
    if (!std::binary_search(expected.begin(), expected.end(), t))
      r.discrepancies.push_back("solution outside the published list: " + triple_text(t));
  }
  for (const auto& t : expected)
    if (!std::binary_search(rep.found_solutions.begin(), rep.found_solutions.end(), t))
      r.discrepancies.push_back("published solution not found: " + triple_text(t));
  std::string listed;
  for (const auto& t : rep.found_solutions) listed += (listed.empty() ? "" : " ") + triple_text(t);
  r.check("primitive solutions in the window = published list in the window",
          rep.found_solutions == expected, listed);
  rep.cases.push_back(std::move(r));
  return rep;
}

VerificationReport run_all(const RunConfig& cfg) {
  cfg.validate();
  VerificationReport rep = end_to_end_search(cfg);
  auto& log = rep.timings;
  std::vector<CaseReport> cases;

  cases.push_back(timed(log, "identities", [] { return verify_identities(); }));
  cases.push_back(timed(log, "case4", [] { return eliminate_f4(true); }));
  cases.push_back(timed(log, "case4-control", [] { return eliminate_f4(false); }));

  std::set<SolutionTriple> lifted;
  for (int i : {1, 2, 3, 5, 6}) {
    CaseReport c = timed(log, "case" + std::to_string(i), [&] {
      return solve_case(i, cfg.st_bound, SolveOptions{cfg.workers, true});
    });
    for (const auto& s : c.solutions)
      for (const auto& t : lift_case_solution(i, s)) lifted.insert(t);
    cases.push_back(std::move(c));
  }
  const long height = cfg.height_bound.fits_slong_p() ? cfg.height_bound.get_si() : 1000;
  cases.push_back(timed(log, "case6.j1", [] { return case6_j1_argument(); }));
  cases.push_back(timed(log, "case6.j2", [] { return case6_j2_argument(); }));
  cases.push_back(timed(log, "case6.jm2", [&] { return case6_jm2_argument(500, height); }));

  for (const char* id : {"C3.1", "C3.0", "C6.0", "C6.1", "C3.-2", "C3.-1", "C3.2", "C6.-1"})
    cases.push_back(timed(log, std::string("covers:") + id,
                          [&] { return covers_report(id, cfg.sieve_primes); }));

  {
    CaseReport obs;
    obs.case_id = "local-observations";
    for (const char* id : {"C3.-2", "C3.-1", "C3.2", "C6.-1"}) {
      obs.curves.push_back(id);
      const CurveModel m = catalogue_entry(id).model;
      for (const auto& p : cfg.sieve_primes)
        obs.notes.push_back(std::string(id) + " at p = " + p.get_str() + ": " +
                            to_string(locally_solvable(m, p)));
    }
    cases.push_back(std::move(obs));
  }

  for (const auto& id : catalogue_ids())
    rep.inventories.push_back(timed(log, "points:" + id, [&] {
      return curve_inventory(id, cfg.height_bound, cfg.workers);
    }));

  {
    CaseReport x;
    x.case_id = "cross-consistency";
    std::vector<SolutionTriple> from_cases;
    for (const auto& t : lifted)
      if (in_window(t, cfg.y_bound, cfg.z_bound)) from_cases.push_back(t);
    std::string listed;
    for (const auto& t : from_cases) listed += (listed.empty() ? "" : " ") + triple_text(t);
    x.check("end-to-end solutions = solutions lifted from the case searches (in the window)",
            from_cases == rep.found_solutions, listed);
    for (const auto& t : rep.found_solutions)
      if (!std::binary_search(from_cases.begin(), from_cases.end(), t))
        x.discrepancies.push_back("end-to-end solution not reached by any case: " + triple_text(t));
    cases.push_back(std::move(x));
  }

  rep.cases.insert(rep.cases.begin(), cases.begin(), cases.end());
  return rep;
}

std::vector<nlohmann::json> report_records(const VerificationReport& rep) {
  std::vector<nlohmann::json> out;
  out.push_back({{"record", "header"}, {"schema_version", kReportSchemaVersion},
                 {"config", to_json(rep.config)}});
  for (const auto& c : rep.cases) {
    nlohmann::json j = to_json(c);
    j["record"] = "case";
    out.push_back(std::move(j));
  }
  for (const auto& inv : rep.inventories) {
    nlohmann::json j = to_json(inv);
    j["record"] = "inventory";
    out.push_back(std::move(j));
  }
  nlohmann::json sols = nlohmann::json::array();
  for (const auto& t : rep.found_solutions) sols.push_back(to_json(t));
  out.push_back({{"record", "solutions"},
                 {"y_bound", rep.config.y_bound.get_str()},
                 {"z_bound", rep.config.z_bound.get_str()},
                 {"solutions", sols}});
  for (const auto& t : rep.timings)
    out.push_back({{"record", "timing"}, {"stage", t.stage}, {"seconds", t.seconds}});
  out.push_back({{"record", "footer"}, {"ok", rep.ok()}, {"discrepancies", rep.discrepancies()}});
  return out;
}

std::string report_summary(const VerificationReport& rep) {
  std::string s;
  for (const auto& c : rep.cases) s += summary_line(c) + "\n";
  for (const auto& inv : rep.inventories) {
    std::string pts;
    for (const auto& p : inv.points) pts += (pts.empty() ? "" : " ") + p.to_string();
    s += inv.id + " (H <= " + inv.height.get_str() + "): {" + pts + "}";
    s += inv.expected ? (inv.consistent() ? " matches published" : " DIFFERS from published")
                      : " (no published list)";
    s += "\n";
  }
  s += "solutions:";
  for (const auto& t : rep.found_solutions) s += " " + triple_text(t);
  s += "\n";
  const auto disc = rep.discrepancies();
  for (const auto& d : disc) s += "DISCREPANCY " + d + "\n";
  s += rep.ok() ? "verdict: OK\n" : "verdict: FAIL (" + std::to_string(disc.size()) + " problems)\n";
  return s;
}

int exit_status(const VerificationReport& rep) { return rep.ok() ? 0 : 1; }

}  // namespace gfe
