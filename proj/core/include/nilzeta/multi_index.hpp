#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"

namespace nilzeta {

/// Exponent tuple in N^n. Ordered lexicographically (the canonical
/// ordering of the Y variables); the componentwise partial order is
/// `precedes`.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  explicit MultiIndex(std::vector<unsigned> entries) : e_(std::move(entries)) {}
  MultiIndex(std::initializer_list<unsigned> entries) : e_(entries) {}

  /// The unit tuple delta^k (k is 0-based).
  static MultiIndex unit(std::size_t n, std::size_t k);

  std::size_t size() const { return e_.size(); }
  unsigned operator[](std::size_t k) const { return e_[k]; }
  unsigned& operator[](std::size_t k) { return e_[k]; }
  const std::vector<unsigned>& entries() const { return e_; }

  unsigned degree() const;
  bool is_zero() const { return degree() == 0; }
  Integer factorial() const;

  /// Componentwise `this <= other`.
  bool precedes(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o.precedes(*this).
  MultiIndex operator-(const MultiIndex& o) const;

  /// All gamma with gamma <= *this componentwise, in lexicographic order.
  std::vector<MultiIndex> lower_set() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

  /// "(1,0,2)"
  std::string to_string() const;

 private:
  std::vector<unsigned> e_;
};

/// Product of binomial coefficients prod_k C(beta_k, gamma_k).
Integer multi_binomial(const MultiIndex& beta, const MultiIndex& gamma);

}  // namespace nilzeta
