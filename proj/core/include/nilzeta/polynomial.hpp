#pragma once

#include <string>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"

namespace nilzeta {

/// Polynomial in one indeterminate over Q, coefficients by ascending
/// power with trailing zeros trimmed (the zero polynomial is empty).
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(const Rational& constant);  // NOLINT: scalars promote

  /// c0 + c1 z
  static RationalPolynomial linear(const Rational& c0, const Rational& c1);
  static RationalPolynomial z() { return linear(0, 1); }

  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  Rational operator()(const Rational& x) const;
  /// p(a z + b)
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "-z^2 + 1/2 z + 3" style, highest power first.
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Lagrange basis on the nodes 0, 1, ..., count-1: L_i(j) = [i == j].
std::vector<RationalPolynomial> lagrange_basis(std::size_t count);

}  // namespace nilzeta
