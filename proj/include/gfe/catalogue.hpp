#pragma once

/**
 * Named curves: "case1", "case2a", "case2b", "C3.j", "C5.j", "C6.j"
 * for j in [-2, 2], and descent covers "cover:<id>:d=<d>" (first factor)
 * or "cover:<id>:d=<d>:B" (second factor).
 *
 * Every catalogued genus-4 curve carries the factorization A*B over Q that
 * its descent uses. For most curves that is the defining one
 * (g, g+2h / h, 2g-3h / 2g+3h, h); where a different grouping of the
 * irreducible factors gives sharper covers it is set here explicitly.
 */

#include "gfe/curve_model.hpp"
#include "gfe/poly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfe {

struct CatalogueEntry {
  std::string id;
  CurveModel model;
  std::optional<std::pair<Poly, Poly>> split;  // A, B with A*B = rhs
  std::string description;
};

/// Base curve ids in a fixed order (no cover ids).
std::vector<std::string> catalogue_ids();

/// Throws std::invalid_argument on an unknown or malformed id.
CatalogueEntry catalogue_entry(const std::string& id);

/// Cover id for the given base curve, twist and factor.
std::string cover_id(const std::string& base, const Int& d, bool second_factor = false);

/// "|d|*Y~^2 = sign(d)*f" style text: the model with a positive twist.
std::string cover_display(const CurveModel& cover);

}  // namespace gfe
