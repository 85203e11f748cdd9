#include "gfe/curve_model.hpp"

#include <stdexcept>

namespace gfe {

CurveModel::CurveModel(Int twist, Poly f) : twist_(std::move(twist)), f_(std::move(f)) {
  if (twist_ == 0) throw std::invalid_argument("CurveModel: twist must be nonzero");
  if (f_.degree() < 1) throw std::invalid_argument("CurveModel: deg f must be >= 1");
  if (!f_.is_integral()) throw std::invalid_argument("CurveModel: f must have integer coefficients");
  if (f_.degree() > 1 && discriminant(f_) == 0)
    throw std::invalid_argument("CurveModel: f is not squarefree: " + f_.to_string());
}

bool CurveModel::contains(const Rational& x, const Rational& y) const {
  return Rational(twist_) * y * y == f_(x);
}

CurveModel CurveModel::folded() const { return CurveModel(1, f_ * Rational(twist_)); }

std::string CurveModel::to_string() const {
  std::string lhs = twist_ == 1 ? "Y^2" : twist_.get_str() + "*Y^2";
  return lhs + " = " + f_.to_string();
}

std::string CurvePoint::to_string() const {
  switch (kind) {
    case Kind::infinity: return "inf";
    case Kind::infinity_plus: return "inf+";
    case Kind::infinity_minus: return "inf-";
    case Kind::affine: break;
  }
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.kind != b.kind) {
    // affine sorts last
    auto rank = [](CurvePoint::Kind k) { return k == CurvePoint::Kind::affine ? 3 : static_cast<int>(k); };
    return rank(a.kind) < rank(b.kind);
  }
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace gfe
