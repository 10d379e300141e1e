#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"
#include "nilzeta/multi_index.hpp"
#include "nilzeta/uea.hpp"

namespace nilzeta {

/// Polynomial-coefficient differential operator sum c x^a d^b on R^n in
/// normal form (multiplications left of derivatives).
class WeylOperator {
 public:
  /// x exponents followed by d exponents.
  using Key = std::vector<std::uint16_t>;
  using Terms = std::map<Key, GaussianRational>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n) : n_(n) {}
  WeylOperator(std::size_t n, const GaussianRational& scalar);

  static WeylOperator term(const MultiIndex& a, const MultiIndex& b, GaussianRational c = 1);
  static WeylOperator x(std::size_t n, std::size_t k, unsigned power = 1);  // k 0-based
  static WeylOperator d(std::size_t n, std::size_t k, unsigned power = 1);

  std::size_t n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(const MultiIndex& a, const MultiIndex& b) const;

  /// Largest |a| + |b| over the terms; 0 for the zero operator.
  unsigned total_degree() const;
  /// True when every coefficient is real.
  bool is_real() const;

  void add_term(const Key& k, const GaussianRational& c);

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const GaussianRational& c);
  WeylOperator operator-() const;
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(const GaussianRational& c, WeylOperator a) { return a *= c; }
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// "2 + x1^2 - d1^2"
  std::string to_string() const;
  /// [{"x":[..],"d":[..],"re":"p/q","im":"p/q"}, ...]
  std::string to_json() const;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

WeylOperator weyl_product(const WeylOperator& a, const WeylOperator& b);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
WeylOperator power(const WeylOperator& a, unsigned k);

/// The representation X_k -> -d_k, Y^beta -> i (-1)^{|beta|} x^beta / beta!.
WeylOperator rho(const UEAElement& u);
WeylOperator rho_monomial(const Algebra& alg, const PBWMonomial& m);

/// 1 + Delta_G with Delta_G = -(sum X_k^2 + sum (Y^beta)^2).
UEAElement laplacian_element(const AlgebraPtr& alg);
/// rho(1 + Delta_G).
WeylOperator delta1(const AlgebraPtr& alg);

/// X^{(0)} = X, X^{(k+1)} = D X^{(k)} - X^{(k)} D.
WeylOperator ad_power(const WeylOperator& d, const WeylOperator& x, unsigned k);

/// [D^i, X] - sum_{k=1}^{i} C(i,k) X^{(k)} D^{i-k}; zero when the expansion holds.
WeylOperator commutator_power_check(const WeylOperator& d, const WeylOperator& x, unsigned i);

/// Canonical pair P_k = rho(X_k) = -d_k, Q_k = rho(-i Y^{delta^k}) = -x_k.
WeylOperator canonical_p(std::size_t n, std::size_t k);
WeylOperator canonical_q(std::size_t n, std::size_t k);

/// -i Y^{delta^k}, the rescaled partner of X_k (k 0-based).
UEAElement rescaled_y(const AlgebraPtr& alg, std::size_t k);

}  // namespace nilzeta
