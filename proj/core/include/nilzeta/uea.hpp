#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilzeta/algebra.hpp"
#include "nilzeta/gaussian_rational.hpp"
#include "nilzeta/multi_index.hpp"

namespace nilzeta {

/// PBW monomial X_1^{p_1}...X_n^{p_n} prod (Y^beta)^{q_beta}, stored as one
/// exponent per variable of the owning Algebra.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  explicit PBWMonomial(std::size_t num_vars) : e_(num_vars, 0) {}
  explicit PBWMonomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}

  static PBWMonomial variable(std::size_t num_vars, std::size_t var, unsigned power = 1);

  std::size_t size() const { return e_.size(); }
  std::uint16_t operator[](std::size_t v) const { return e_[v]; }
  std::uint16_t& operator[](std::size_t v) { return e_[v]; }
  const std::vector<std::uint16_t>& exponents() const { return e_; }

  unsigned degree() const;
  bool is_one() const { return degree() == 0; }

  /// Componentwise divisibility: every exponent of *this is <= the other's.
  bool divides(const PBWMonomial& other) const;

  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

 private:
  std::vector<std::uint16_t> e_;
};

/// The total degree ordering: degree first, then the first differing
/// exponent along X_1 < ... < X_n < Y^beta (beta ascending), the smaller
/// exponent giving the smaller monomial.
std::strong_ordering monomial_compare(const PBWMonomial& a, const PBWMonomial& b);

struct MonomialLess {
  bool operator()(const PBWMonomial& a, const PBWMonomial& b) const { return monomial_compare(a, b) < 0; }
};

/// Exact element of U(g) in PBW normal form.
class UEAElement {
 public:
  using Terms = std::map<PBWMonomial, GaussianRational, MonomialLess>;

  explicit UEAElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  UEAElement(AlgebraPtr alg, const GaussianRational& scalar);

  static UEAElement monomial(AlgebraPtr alg, PBWMonomial m, GaussianRational c = 1);
  static UEAElement variable(AlgebraPtr alg, std::size_t var, GaussianRational c = 1);
  static UEAElement x(AlgebraPtr alg, unsigned k1);
  static UEAElement y(AlgebraPtr alg, const MultiIndex& beta);

  const AlgebraPtr& algebra() const { return alg_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  GaussianRational coefficient(const PBWMonomial& m) const;

  void add_term(const PBWMonomial& m, const GaussianRational& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const GaussianRational& c);
  UEAElement operator-() const;

  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const GaussianRational& c, UEAElement a) { return a *= c; }
  friend UEAElement operator*(const UEAElement& a, const UEAElement& b);
  friend bool operator==(const UEAElement& a, const UEAElement& b);

  /// "X1^2*Y[1] + (3i)*Y[0]" style; parseable by the command-line grammar.
  std::string to_string() const;

 private:
  void check_same(const UEAElement& o) const;

  AlgebraPtr alg_;
  Terms terms_;
};

/// Product in PBW normal form.
UEAElement normal_product(const UEAElement& u, const UEAElement& v);
UEAElement commutator(const UEAElement& u, const UEAElement& v);

/// Largest monomial and its coefficient. Throws DomainError on zero.
std::pair<PBWMonomial, GaussianRational> leading_term(const UEAElement& u);
/// Degree of the leading monomial; throws DomainError on zero.
unsigned degree(const UEAElement& u);

/// Y_*^gamma = i^{1-|gamma|} prod_k (Y^{delta^k})^{gamma_k}.
UEAElement y_star(const AlgebraPtr& alg, const MultiIndex& gamma);

/// prod_k (Y^{delta^k})^{gamma_k} without the scalar factor.
PBWMonomial unit_y_power(const Algebra& alg, const MultiIndex& gamma);

/// Gamma = prod_j Gamma_j applied to u, with
/// Gamma_j = sum_k i^k/k! (Y^{delta^j})^k (ad X_j)^k; the adjoint action is
/// computed by PBW commutators.
UEAElement gamma_operator(const UEAElement& u);

/// sum_{gamma <= beta} (-1)^{|gamma|}/gamma! Y_*^gamma Y^{beta-gamma}.
UEAElement gamma_closed_form(const AlgebraPtr& alg, const MultiIndex& beta);

/// Gamma(i Y^beta): computes the operator form and the closed form and
/// throws std::logic_error if they differ. DomainError if beta is not in
/// the index set.
UEAElement gamma_apply(const AlgebraPtr& alg, const MultiIndex& beta);

/// All monomials of degree <= d, ascending.
std::vector<PBWMonomial> monomials_up_to(const Algebra& alg, unsigned d);
/// All monomials of degree exactly d, ascending.
std::vector<PBWMonomial> monomials_of_degree(const Algebra& alg, unsigned d);

/// Number of Y factors (counted with multiplicity) and the weight
/// sum_beta q_beta beta of a monomial.
MultiIndex y_weight(const Algebra& alg, const PBWMonomial& m);
MultiIndex x_exponents(const Algebra& alg, const PBWMonomial& m);

std::string monomial_to_string(const Algebra& alg, const PBWMonomial& m);

}  // namespace nilzeta
