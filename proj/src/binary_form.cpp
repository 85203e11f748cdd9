#include "gfe/binary_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfe {

BinaryForm::BinaryForm(int degree, std::vector<Int> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("BinaryForm: need degree+1 coefficients");
}

BinaryForm::BinaryForm(int degree, std::initializer_list<long> coeffs) : degree_(degree) {
  coeffs_.clear();
  for (long c : coeffs) coeffs_.emplace_back(c);
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw std::invalid_argument("BinaryForm: need degree+1 coefficients");
}

BinaryForm BinaryForm::zero(int degree) {
  return BinaryForm(degree, std::vector<Int>(degree + 1, Int(0)));
}

BinaryForm BinaryForm::first_variable() { return BinaryForm(1, {1, 0}); }
BinaryForm BinaryForm::second_variable() { return BinaryForm(1, {0, 1}); }
BinaryForm BinaryForm::constant(const Int& c) { return BinaryForm(0, std::vector<Int>{c}); }

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

Int BinaryForm::operator()(const Int& s, const Int& t) const {
  // Homogeneous Horner: sum c_i s^(d-i) t^i
  Int acc = 0;
  Int tpow = 1;
  std::vector<Int> spow(degree_ + 1);
  spow[0] = 1;
  for (int i = 1; i <= degree_; ++i) spow[i] = spow[i - 1] * s;
  for (int i = 0; i <= degree_; ++i) {
    acc += coeffs_[i] * spow[degree_ - i] * tpow;
    tpow *= t;
  }
  return acc;
}

std::optional<__int128> BinaryForm::eval_checked(std::int64_t s, std::int64_t t) const {
  __int128 acc = 0;
  for (int i = 0; i <= degree_; ++i) {
    if (!coeffs_[i].fits_slong_p()) return std::nullopt;
    __int128 term = coeffs_[i].get_si();
    for (int k = 0; k < degree_ - i; ++k)
      if (__builtin_mul_overflow(term, static_cast<__int128>(s), &term)) return std::nullopt;
    for (int k = 0; k < i; ++k)
      if (__builtin_mul_overflow(term, static_cast<__int128>(t), &term)) return std::nullopt;
    if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
  }
  return acc;
}

Poly BinaryForm::dehomogenize() const {
  // coefficient of X^k is the coefficient of s^k t^(d-k), i.e. index d-k
  std::vector<Rational> v(degree_ + 1);
  for (int k = 0; k <= degree_; ++k) v[k] = Rational(coeffs_[degree_ - k]);
  return Poly(std::move(v));
}

BinaryForm BinaryForm::homogenize(const Poly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("homogenize: degree too small");
  auto ints = p.integer_coeffs();
  std::vector<Int> c(degree + 1, Int(0));
  for (std::size_t k = 0; k < ints.size(); ++k) c[degree - k] = ints[k];
  return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::negate_second() const {
  BinaryForm r = *this;
  for (int i = 1; i <= degree_; i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

BinaryForm BinaryForm::negate_first() const {
  BinaryForm r = *this;
  for (int i = 0; i <= degree_; ++i)
    if ((degree_ - i) % 2 == 1) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result = constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree_ != degree_) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    throw std::invalid_argument("BinaryForm: adding forms of different degree");
  }
  for (int i = 0; i <= degree_; ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm& BinaryForm::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r = BinaryForm::zero(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i)
    for (int j = 0; j <= b.degree_; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::string BinaryForm::to_string(std::string_view s, std::string_view t) const {
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int mag = abs(c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    const int ds = degree_ - i;
    const int dt = i;
    std::string mono;
    auto add = [&mono](std::string_view v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add(s, ds);
    add(t, dt);
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return first ? "0" : out;
}

}  // namespace gfe
