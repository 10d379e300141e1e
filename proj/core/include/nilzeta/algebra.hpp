#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"
#include "nilzeta/multi_index.hpp"

namespace nilzeta {

/// Description of one algebra of the family: the dimension n, the
/// exponent tuple alpha and a partition of {1..n} (1-based, as written
/// in spec files).
struct AlgebraSpec {
  unsigned n = 0;
  std::vector<unsigned> alpha;
  std::vector<std::vector<unsigned>> partition;

  std::size_t p() const { return partition.size(); }
  std::string to_string() const;

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Checks the raw description and returns it canonicalized: each block
/// sorted ascending, blocks sorted by their smallest element.
/// Throws SpecError on n = 0, a zero or missing alpha entry, or blocks
/// that are not a partition of {1..n}.
AlgebraSpec validate_spec(AlgebraSpec raw);

/// Parses {"n": 2, "alpha": [1,2], "partition": [[1],[2]]} and validates.
AlgebraSpec spec_from_json(const std::string& text);
std::string spec_to_json(const AlgebraSpec& spec);

struct IndexSets {
  /// The union of the block sets, deduplicated, lexicographically ascending.
  std::vector<MultiIndex> all;
  /// One lexicographically sorted set per block; each contains (0,...,0).
  std::vector<std::vector<MultiIndex>> blocks;
};

IndexSets index_set(const AlgebraSpec& spec);

/// A basis element of the Lie algebra: X_k (k is 1-based) or Y^beta.
struct BasisSymbol {
  enum class Kind { X, Y };
  Kind kind = Kind::X;
  unsigned k = 0;
  MultiIndex beta;

  static BasisSymbol x(unsigned k) { return {Kind::X, k, {}}; }
  static BasisSymbol y(MultiIndex beta) { return {Kind::Y, 0, std::move(beta)}; }

  std::string to_string() const;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Validated algebra with its index set and variable numbering. The
/// variables of U(g) are numbered 0..n-1 for X_1..X_n followed by one
/// variable per Y^beta in the order of index_set(). Shared immutably by
/// every element built over it.
class Algebra {
 public:
  static std::shared_ptr<const Algebra> make(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  unsigned n() const { return spec_.n; }
  std::size_t p() const { return spec_.p(); }
  unsigned alpha(std::size_t k) const { return spec_.alpha[k]; }

  const std::vector<MultiIndex>& index_set() const { return sets_.all; }
  const std::vector<std::vector<MultiIndex>>& block_sets() const { return sets_.blocks; }
  /// 0-based coordinates of block j, ascending.
  std::vector<std::size_t> block_coordinates(std::size_t j) const;
  /// Block containing 0-based coordinate k.
  std::size_t block_of(std::size_t k) const { return block_of_[k]; }

  std::size_t num_y() const { return sets_.all.size(); }
  std::size_t num_variables() const { return spec_.n + sets_.all.size(); }
  bool is_x(std::size_t var) const { return var < spec_.n; }

  /// Position of beta in index_set(), if present.
  std::optional<std::size_t> y_position(const MultiIndex& beta) const;
  std::size_t y_variable(const MultiIndex& beta) const;  // throws DomainError
  std::size_t x_variable(unsigned k1) const;             // 1-based k, throws DomainError
  std::size_t variable(const BasisSymbol& s) const;
  BasisSymbol symbol(std::size_t var) const;
  const MultiIndex& beta_of(std::size_t var) const { return sets_.all[var - spec_.n]; }

  /// Y-position of beta - delta^k, or nullopt when beta_k = 0.
  std::optional<std::size_t> lowered(std::size_t k, std::size_t ypos) const { return lower_[k][ypos]; }

  std::string variable_name(std::size_t var) const;

  bool same_as(const Algebra& other) const { return this == &other || spec_ == other.spec_; }

 private:
  explicit Algebra(AlgebraSpec spec);

  AlgebraSpec spec_;
  IndexSets sets_;
  std::map<MultiIndex, std::size_t> ypos_;
  std::vector<std::size_t> block_of_;
  std::vector<std::vector<std::optional<std::size_t>>> lower_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Element of the Lie algebra: basis variable -> coefficient, zero
/// coefficients never stored.
class LieElement {
 public:
  explicit LieElement(AlgebraPtr alg) : alg_(std::move(alg)) {}
  static LieElement basis(AlgebraPtr alg, std::size_t var, GaussianRational c = 1);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::map<std::size_t, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coefficient(std::size_t var) const;

  void add(std::size_t var, const GaussianRational& c);
  LieElement& operator+=(const LieElement& o);
  LieElement& operator*=(const GaussianRational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator*(const GaussianRational& c, LieElement a) { return a *= c; }
  friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::map<std::size_t, GaussianRational> terms_;
};

/// [a, b] for two basis symbols of alg. Throws DomainError if either
/// symbol lies outside the basis.
LieElement bracket(const BasisSymbol& a, const BasisSymbol& b, const AlgebraPtr& alg);

/// Table of brackets of basis variables. Built from the defining
/// relations; entries can be overwritten to construct negative controls.
class StructureConstants {
 public:
  explicit StructureConstants(AlgebraPtr alg);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t dim() const { return table_.size(); }
  const LieElement& bracket(std::size_t a, std::size_t b) const { return table_[a][b]; }
  LieElement bracket(const LieElement& u, const LieElement& v) const;

  /// Sets [a, b] = value and [b, a] = -value.
  void set_bracket(std::size_t a, std::size_t b, const LieElement& value);

 private:
  AlgebraPtr alg_;
  std::vector<std::vector<LieElement>> table_;
};

struct JacobiResult {
  bool ok = true;
  /// First failing triple of variables, if any.
  std::optional<std::array<std::size_t, 3>> triple;
  std::string description;
};

JacobiResult jacobi_check(const StructureConstants& sc);
JacobiResult jacobi_check(const AlgebraPtr& alg);

/// Length of the lower central series: smallest c with g^{c+1} = 0.
unsigned nilpotency_class(const StructureConstants& sc);
unsigned nilpotency_class(const AlgebraPtr& alg);

/// Basis variables spanning {X : f([X, Y]) = 0 for all Y}, f the dual
/// functional of Y^(0,...,0), obtained as an exact null space.
std::vector<std::size_t> isotropic_subalgebra(const AlgebraPtr& alg);

}  // namespace nilzeta
