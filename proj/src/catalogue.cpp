#include "gfe/catalogue.hpp"

#include "gfe/hypercurve.hpp"

#include <stdexcept>

namespace gfe {

namespace {

const std::pair<int, const char*> kFamilies[] = {{3, "C3"}, {5, "C5"}, {6, "C6"}};

// Descent grouping per curve. Factors by name: q = X^4 + 30X^2 + 45 divides
// g_0 and 2g_1 + 3h_1; the rest are the defining quintics.
std::pair<Poly, Poly> split_for(int family, int j) {
  auto [a, b] = family_factors(family, j);
  const Poly quartic{45, 0, 30, 0, 1};
  if (family == 3 && j == 0) {
    // g_0 = X*q: group X with g_0 + 2h_0.
    return {Poly::x() * b, quartic};
  }
  if (family == 5 && j == -1) {
    // Identical model to C3.0; same grouping.
    auto [a30, b30] = split_for(3, 0);
    return {a30, b30};
  }
  if (family == 6 && j == 1) {
    // 2g_1 + 3h_1 = -X*q: group -X with h_1.
    return {quartic, -Poly::x() * a};
  }
  if (family == 6) return {b, a};  // 2g + 3h first: its covers are the displayed ones
  return {a, b};
}

Int parse_int(const std::string& s, const std::string& id) {
  try {
    const Rational r = parse_rational(s);
    if (r.get_den() != 1) throw std::invalid_argument(s);
    return r.get_num();
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad integer in curve id: " + id);
  }
}

}  // namespace

std::vector<std::string> catalogue_ids() {
  std::vector<std::string> ids{"case1", "case2a", "case2b"};
  for (const auto& [family, name] : kFamilies)
    for (int j = -2; j <= 2; ++j) ids.push_back(std::string(name) + "." + std::to_string(j));
  return ids;
}

std::string cover_id(const std::string& base, const Int& d, bool second_factor) {
  return "cover:" + base + ":d=" + to_string(d) + (second_factor ? ":B" : "");
}

std::string cover_display(const CurveModel& cover) {
  const CurveModel c = sign_normalized(cover);
  const std::string lhs = c.twist() == 1 ? "Y~^2" : to_string(c.twist()) + "*Y~^2";
  return lhs + " = " + c.rhs().to_string();
}

CatalogueEntry catalogue_entry(const std::string& id) {
  if (id == "case1")
    return {id, CurveModel(1, Poly{-3, 0, 0, 0, 0, 4}), std::nullopt,
            "Y^2 = 4X^5 - 3 (X = w3/w1^2, Y = 4t/w1^5 - 1)"};
  if (id == "case2a")
    return {id, CurveModel(1, Poly{-3, 0, 0, 0, 0, 4}), std::nullopt,
            "Y^2 = 4X^5 - 3 (X = w3/w1^2, Y = (2s + w1^5)/w1^5)"};
  if (id == "case2b")
    return {id, CurveModel(1, Poly{-48, 0, 0, 0, 0, 1}), std::nullopt,
            "Y^2 = X^5 - 48 (X = w3/w1^2, Y = s/w1^5 + 4)"};

  if (id.rfind("cover:", 0) == 0) {
    // cover:<base>:d=<d>[:B]
    const std::string rest = id.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed cover id: " + id);
    const std::string base = rest.substr(0, colon);
    std::string tail = rest.substr(colon + 1);
    bool second = false;
    if (tail.size() > 2 && tail.compare(tail.size() - 2, 2, ":B") == 0) {
      second = true;
      tail.resize(tail.size() - 2);
    }
    if (tail.rfind("d=", 0) != 0) throw std::invalid_argument("malformed cover id: " + id);
    const Int d = parse_int(tail.substr(2), id);
    if (d == 0 || squarefree_part(d) != d)
      throw std::invalid_argument("cover twist must be squarefree: " + id);
    const CatalogueEntry parent = catalogue_entry(base);
    if (!parent.split) throw std::invalid_argument("curve has no descent factors: " + base);
    const Poly& f = second ? parent.split->second : parent.split->first;
    return {id, CurveModel(d, f), std::nullopt,
            "descent cover of " + base + " by " + (second ? "B" : "A")};
  }

  for (const auto& [family, name] : kFamilies) {
    const std::string prefix = std::string(name) + ".";
    if (id.rfind(prefix, 0) != 0) continue;
    const Int j = parse_int(id.substr(prefix.size()), id);
    if (j < -2 || j > 2) throw std::invalid_argument("unit exponent out of range: " + id);
    const int jj = static_cast<int>(j.get_si());
    auto split = split_for(family, jj);
    return {id, build_curve(family, jj), split,
            "family " + std::to_string(family) + ", unit exponent " + std::to_string(jj)};
  }
  throw std::invalid_argument("unknown curve id: " + id);
}

}  // namespace gfe
