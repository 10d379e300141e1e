#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nilzeta/algebra.hpp"
#include "nilzeta/polynomial.hpp"
#include "nilzeta/uea.hpp"
#include "nilzeta/weyl.hpp"

namespace nilzeta {

using ScalarVector = std::vector<GaussianRational>;

/// sum_k a_k X_k [T, Yh_k] + b_k [X_k, T] Yh_k with Yh_k = -i Y^{delta^k}.
UEAElement g_ab(const ScalarVector& a, const ScalarVector& b, const UEAElement& t);
/// sum_k a_k [X_k T, Yh_k] + b_k [X_k, T Yh_k].
UEAElement h_ab(const ScalarVector& a, const ScalarVector& b, const UEAElement& t);
/// The same operator on the Weyl side: sum_k a_k [P_k W, Q_k] + b_k [P_k, W Q_k].
WeylOperator h_ab_weyl(const ScalarVector& a, const ScalarVector& b, const WeylOperator& w);

/// Eigenvalue of g_ab on a monomial modulo the kernel:
/// sum a_k p_k + sum b_k (sum_beta q_beta beta_k).
GaussianRational g_eigenvalue(const Algebra& alg, const ScalarVector& a, const ScalarVector& b,
                              const PBWMonomial& t);

/// One factor of the products g_s / h_s: a coordinate i_j and an r_j in
/// [1, alpha_{i_j}] per block.
struct FactorChoice {
  std::vector<std::size_t> coords;  // 0-based, one per block
  std::vector<unsigned> r;
  ScalarVector a;  // all ones
  ScalarVector b;  // 1/alpha_{i_j} at coords[j]

  /// s + sum (r_j/alpha_{i_j} - 1)
  Rational g_shift(const Algebra& alg, unsigned s) const;
  /// s + n - p + sum (r_j+1)/alpha_{i_j}
  Rational h_shift(const Algebra& alg, unsigned s) const;
  std::string to_string() const;
};

FactorChoice make_choice(const Algebra& alg, std::vector<std::size_t> coords, std::vector<unsigned> r);

/// All choices in lexicographic order of (coordinate tuple, r tuple).
std::vector<FactorChoice> factor_choices(const Algebra& alg);

/// The choice read off literally from a monomial of O: in each block the
/// smallest Y index present fixes the coordinate (first nonzero entry) and
/// r = that entry; blocks without Y use the block minimum and r = alpha.
FactorChoice choose_factor_literal(const Algebra& alg, const PBWMonomial& t);

/// A choice whose g_ab eigenvalue equals g_shift for every monomial of O:
/// in each block take the coordinate maximizing m = ceil(w_i/alpha_i) for
/// the block weight w, with r = w_i - (m-1) alpha_i; blocks without Y use
/// the block minimum and r = alpha.
FactorChoice choose_factor(const Algebra& alg, const PBWMonomial& t);

/// Products of the shifted factors, applied in the order of factor_choices().
UEAElement g_s(const AlgebraPtr& alg, unsigned s, const UEAElement& u);
UEAElement h_s(const AlgebraPtr& alg, unsigned s, const UEAElement& u);
WeylOperator t_s(const AlgebraPtr& alg, unsigned s, const WeylOperator& w);

/// Families P, Q and the Laplacian used by the Taylor expansions.
struct TaylorFrame {
  std::vector<WeylOperator> p;
  std::vector<WeylOperator> q;
  WeylOperator delta;
};

/// P_k = -d_k, Q_k = -x_k, delta = delta1(alg).
TaylorFrame weyl_frame(const AlgebraPtr& alg);

/// W -> sum a_i [-Q_i, P_i W] + b_i [P_i, Q_i W].
WeylOperator h_frame(const TaylorFrame& f, const ScalarVector& a, const ScalarVector& b, const WeylOperator& w);

/// sum a_i P_i X Q_i^{(k)} - b_i Q_i X P_i^{(k)}, with ^{(k)} the k-fold
/// commutator with the Laplacian.
WeylOperator a_coefficient(const TaylorFrame& f, const ScalarVector& a, const ScalarVector& b,
                           const WeylOperator& x, unsigned k);

using FactorList = std::vector<std::pair<ScalarVector, ScalarVector>>;

/// C_0..C_i for the composition of the listed operators (first applied first).
std::vector<WeylOperator> taylor_coeffs(const TaylorFrame& f, const FactorList& factors, const WeylOperator& x,
                                        unsigned i);

/// H(X Delta^i) - sum_k C(i,k) C_k Delta^{i-k}; zero when the expansion is exact.
WeylOperator taylor_residual(const TaylorFrame& f, const FactorList& factors, const WeylOperator& x, unsigned i);

/// prod over choices of (p - n - sum (r_j+1)/alpha_{i_j} - z).
RationalPolynomial b_polynomial(const Algebra& alg);
/// One root per choice, in the order of factor_choices().
std::vector<Rational> b_roots(const Algebra& alg);

struct PoleTriple {
  std::vector<unsigned> i;  // 1-based coordinates
  std::vector<unsigned> r;
  long l = 0;
};

struct PoleEntry {
  Rational omega;
  unsigned multiplicity = 0;
  std::vector<PoleTriple> triples;
};

struct PoleLattice {
  unsigned q = 0;
  Rational s0;
  long l_max = 0;
  std::vector<PoleEntry> entries;  // descending omega
};

/// omega = (p-n-q)/2 - sum (r_j+1)/(2 alpha_{i_j}) + l/2 over all choices and
/// integers l with sum (r_j+1)/alpha_{i_j} + n - p - s0 <= l <= l_max.
PoleLattice pole_lattice(const Algebra& alg, unsigned q, const Rational& s0, long l_max);

/// Smallest omega over the choices at l = 0.
Rational abscissa_candidate(const Algebra& alg, unsigned q);

struct GenericPole {
  Rational omega;
  unsigned multiplicity = 0;
  std::vector<std::pair<std::size_t, long>> sources;  // (root index, l)
};

/// Union over roots a of {(a - q)/r + l/r : l >= -p - a, l <= l_max}.
std::vector<GenericPole> generic_pole_lattice(const std::vector<Rational>& roots, long q, unsigned r,
                                              const Rational& p, long l_max);

/// sum_{i=0}^{N+deg b-1} b(r i + q) L_i(z) == b(r z + q). Throws DomainError
/// when there are too few nodes (N = 0).
bool lagrange_identity_check(const RationalPolynomial& b, unsigned r, unsigned q, unsigned n_terms);

}  // namespace nilzeta
