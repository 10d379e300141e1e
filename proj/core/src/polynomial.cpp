#include "nilzeta/polynomial.hpp"

namespace nilzeta {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(const Rational& constant) : c_{constant} { trim(); }

RationalPolynomial RationalPolynomial::linear(const Rational& c0, const Rational& c1) {
  return RationalPolynomial(std::vector<Rational>{c0, c1});
}

void RationalPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a, const Rational& b) const {
  RationalPolynomial out;
  const RationalPolynomial inner = linear(b, a);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= inner;
    out += RationalPolynomial(*it);
  }
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& q = c_[k];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (s.empty())
      s += sgn(q) < 0 ? "-" : "";
    else
      s += sgn(q) < 0 ? " - " : " + ";
    const bool unit = mag == 1;
    if (k == 0 || !unit) s += mag.get_str();
    if (k > 0) {
      if (!unit) s += " ";
      s += var;
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

std::vector<RationalPolynomial> lagrange_basis(std::size_t count) {
  std::vector<RationalPolynomial> out;
  for (std::size_t i = 0; i < count; ++i) {
    RationalPolynomial l(Rational(1));
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      const Rational denom = Rational(static_cast<long>(i)) - Rational(static_cast<long>(j));
      l *= RationalPolynomial::linear(Rational(-static_cast<long>(j)) / denom, Rational(1) / denom);
    }
    out.push_back(std::move(l));
  }
  return out;
}

}  // namespace nilzeta
