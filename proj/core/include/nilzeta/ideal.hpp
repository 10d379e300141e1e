#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "nilzeta/algebra.hpp"
#include "nilzeta/sparse_echelon.hpp"
#include "nilzeta/uea.hpp"
#include "nilzeta/weyl.hpp"

namespace nilzeta {

struct IdealGenerator {
  MultiIndex beta;
  UEAElement element;
};

/// {Y_*^beta - beta! Y^beta : beta in A^I}, one entry per beta (the entries
/// for beta = delta^k are zero and kept).
std::vector<IdealGenerator> product_generators(const AlgebraPtr& alg);

/// {Y^(0,...,0) - i} followed by {Gamma(i Y^beta) : |beta| >= 2}.
std::vector<IdealGenerator> gamma_generators(const AlgebraPtr& alg);

/// U lies in the kernel of rho.
bool is_member(const UEAElement& u);

/// Monomials of degree <= d split into leading terms of the kernel T and
/// the complement O, with a reduced basis of ker rho restricted to U_d.
struct DegreeSlice {
  unsigned degree = 0;
  std::vector<PBWMonomial> monomials;  // ascending
  std::vector<bool> in_t;              // parallel to monomials
  std::vector<PBWMonomial> t_set;
  std::vector<PBWMonomial> o_set;
  /// One vector m - Can(m) per m in t_set, same order; each has leading
  /// monomial m and all other support in o_set.
  std::vector<UEAElement> kernel_basis;

  bool in_T(const PBWMonomial& m) const;
  std::size_t kernel_dimension() const { return kernel_basis.size(); }
};

/// The kernel of rho, handled degree by degree up to a hard cap. Slices
/// are extended lazily and cached; all results are deterministic.
class Ideal {
 public:
  static constexpr unsigned kDefaultCap = 6;

  explicit Ideal(AlgebraPtr alg, unsigned cap = kDefaultCap);

  const AlgebraPtr& algebra() const { return alg_; }
  unsigned cap() const { return cap_; }

  /// Throws LimitError when d exceeds the cap.
  const DegreeSlice& slice(unsigned d);

  /// Can(U): the unique representative of U modulo the kernel supported on O.
  UEAElement canonical_form(const UEAElement& u);

  bool is_leading_term(const PBWMonomial& m);

  /// Smallest q with W in rho(span S_q); -1 for W = 0; nullopt when W is
  /// not reached up to the cap.
  std::optional<int> filtration_min_degree(const WeylOperator& w);

  /// Preimage of W supported on O, if W is reached up to the cap.
  std::optional<UEAElement> preimage(const WeylOperator& w);

 private:
  void extend_to(unsigned d);
  std::optional<UEAElement> solve(const WeylOperator& w);

  AlgebraPtr alg_;
  unsigned cap_;
  int built_ = -1;
  std::mutex mutex_;
  SparseEchelon<WeylOperator::Key> echelon_;
  std::vector<UEAElement> row_preimage_;  // rho(row_preimage_[r]) = echelon row r
  std::vector<PBWMonomial> monomials_;
  std::vector<bool> in_t_;
  std::map<PBWMonomial, UEAElement, MonomialLess> canonical_;  // Can(m) per monomial
  std::map<unsigned, DegreeSlice> slices_;
};

/// Convenience: slice of degree d computed with a fresh Ideal.
DegreeSlice build_slice(const AlgebraPtr& alg, unsigned d);

std::optional<int> filtration_min_degree(const WeylOperator& w, const AlgebraPtr& alg,
                                         unsigned cap = Ideal::kDefaultCap);

/// Span of all products u g v (u, v monomials, g a generator) of degree at
/// most max_degree, kept in echelon form with pivots at leading monomials.
class GeneratedSpan {
 public:
  GeneratedSpan(const AlgebraPtr& alg, const std::vector<UEAElement>& generators, unsigned max_degree);

  unsigned max_degree() const { return max_degree_; }
  /// dim of (span) intersected with U_d.
  std::size_t dimension(unsigned d) const;
  /// Leading monomials of span intersected with U_d, ascending.
  std::vector<PBWMonomial> leading_terms(unsigned d) const;

 private:
  AlgebraPtr alg_;
  unsigned max_degree_;
  SparseEchelon<PBWMonomial, MonomialLess> echelon_;
};

}  // namespace nilzeta
