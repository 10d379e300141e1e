#include "nilzeta/reduction.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nilzeta/error.hpp"

namespace nilzeta {

namespace {

void check_sizes(std::size_t n, const ScalarVector& a, const ScalarVector& b) {
  if (a.size() != n || b.size() != n) throw DomainError("coefficient vectors must have length n");
}

}  // namespace

UEAElement g_ab(const ScalarVector& a, const ScalarVector& b, const UEAElement& t) {
  const AlgebraPtr& alg = t.algebra();
  check_sizes(alg->n(), a, b);
  UEAElement out(alg);
  for (std::size_t k = 0; k < alg->n(); ++k) {
    const UEAElement xk = UEAElement::x(alg, static_cast<unsigned>(k + 1));
    const UEAElement yk = rescaled_y(alg, k);
    if (!a[k].is_zero()) out += a[k] * normal_product(xk, commutator(t, yk));
    if (!b[k].is_zero()) out += b[k] * normal_product(commutator(xk, t), yk);
  }
  return out;
}

UEAElement h_ab(const ScalarVector& a, const ScalarVector& b, const UEAElement& t) {
  const AlgebraPtr& alg = t.algebra();
  check_sizes(alg->n(), a, b);
  UEAElement out(alg);
  for (std::size_t k = 0; k < alg->n(); ++k) {
    const UEAElement xk = UEAElement::x(alg, static_cast<unsigned>(k + 1));
    const UEAElement yk = rescaled_y(alg, k);
    if (!a[k].is_zero()) out += a[k] * commutator(normal_product(xk, t), yk);
    if (!b[k].is_zero()) out += b[k] * commutator(xk, normal_product(t, yk));
  }
  return out;
}

WeylOperator h_ab_weyl(const ScalarVector& a, const ScalarVector& b, const WeylOperator& w) {
  const std::size_t n = w.n();
  check_sizes(n, a, b);
  WeylOperator out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const WeylOperator p = canonical_p(n, k), q = canonical_q(n, k);
    if (!a[k].is_zero()) out += a[k] * commutator(weyl_product(p, w), q);
    if (!b[k].is_zero()) out += b[k] * commutator(p, weyl_product(w, q));
  }
  return out;
}

GaussianRational g_eigenvalue(const Algebra& alg, const ScalarVector& a, const ScalarVector& b,
                              const PBWMonomial& t) {
  check_sizes(alg.n(), a, b);
  const MultiIndex w = y_weight(alg, t);
  GaussianRational ev;
  for (std::size_t k = 0; k < alg.n(); ++k) {
    ev += a[k] * GaussianRational(static_cast<long>(t[k]));
    ev += b[k] * GaussianRational(static_cast<long>(w[k]));
  }
  return ev;
}

Rational FactorChoice::g_shift(const Algebra& alg, unsigned s) const {
  Rational v = s;
  for (std::size_t j = 0; j < coords.size(); ++j) v += ratio(r[j], alg.alpha(coords[j])) - 1;
  return v;
}

Rational FactorChoice::h_shift(const Algebra& alg, unsigned s) const {
  Rational v = Rational(static_cast<long>(s) + static_cast<long>(alg.n()) - static_cast<long>(alg.p()));
  for (std::size_t j = 0; j < coords.size(); ++j) v += ratio(r[j] + 1, alg.alpha(coords[j]));
  return v;
}

std::string FactorChoice::to_string() const {
  std::ostringstream os;
  os << "i=(";
  for (std::size_t j = 0; j < coords.size(); ++j) os << (j ? "," : "") << coords[j] + 1;
  os << ") r=(";
  for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
  os << ")";
  return os.str();
}

FactorChoice make_choice(const Algebra& alg, std::vector<std::size_t> coords, std::vector<unsigned> r) {
  if (coords.size() != alg.p() || r.size() != alg.p()) throw DomainError("one coordinate per block expected");
  FactorChoice c;
  c.a.assign(alg.n(), GaussianRational(1));
  c.b.assign(alg.n(), GaussianRational(0));
  for (std::size_t j = 0; j < coords.size(); ++j) {
    if (alg.block_of(coords[j]) != j) throw DomainError("coordinate outside its block");
    if (r[j] < 1 || r[j] > alg.alpha(coords[j])) throw DomainError("r outside [1, alpha]");
    c.b[coords[j]] += GaussianRational(ratio(1, alg.alpha(coords[j])));
  }
  c.coords = std::move(coords);
  c.r = std::move(r);
  return c;
}

std::vector<FactorChoice> factor_choices(const Algebra& alg) {
  const std::size_t p = alg.p();
  std::vector<std::vector<std::size_t>> tuples{{}};
  for (std::size_t j = 0; j < p; ++j) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : tuples)
      for (std::size_t k : alg.block_coordinates(j)) {
        auto e = t;
        e.push_back(k);
        next.push_back(std::move(e));
      }
    tuples = std::move(next);
  }
  std::vector<FactorChoice> out;
  for (const auto& coords : tuples) {
    std::vector<std::vector<unsigned>> rs{{}};
    for (std::size_t j = 0; j < p; ++j) {
      std::vector<std::vector<unsigned>> next;
      for (const auto& t : rs)
        for (unsigned r = 1; r <= alg.alpha(coords[j]); ++r) {
          auto e = t;
          e.push_back(r);
          next.push_back(std::move(e));
        }
      rs = std::move(next);
    }
    for (auto& r : rs) out.push_back(make_choice(alg, coords, std::move(r)));
  }
  return out;
}

namespace {

// Block of a nonzero Y index: the block holding its support.
std::size_t block_of_beta(const Algebra& alg, const MultiIndex& beta) {
  for (std::size_t k = 0; k < beta.size(); ++k)
    if (beta[k]) return alg.block_of(k);
  throw DomainError("the zero index belongs to every block");
}

}  // namespace

FactorChoice choose_factor_literal(const Algebra& alg, const PBWMonomial& t) {
  std::vector<std::size_t> coords;
  std::vector<unsigned> r;
  for (std::size_t j = 0; j < alg.p(); ++j) {
    const auto block = alg.block_coordinates(j);
    bool found = false;
    for (std::size_t y = 0; y < alg.num_y() && !found; ++y) {
      const MultiIndex& beta = alg.index_set()[y];
      if (t[alg.n() + y] == 0 || beta.is_zero() || block_of_beta(alg, beta) != j) continue;
      for (std::size_t k : block)
        if (beta[k]) {
          coords.push_back(k);
          r.push_back(beta[k]);
          found = true;
          break;
        }
    }
    if (!found) {
      coords.push_back(block.front());
      r.push_back(alg.alpha(block.front()));
    }
  }
  return make_choice(alg, std::move(coords), std::move(r));
}

FactorChoice choose_factor(const Algebra& alg, const PBWMonomial& t) {
  const MultiIndex w = y_weight(alg, t);
  std::vector<std::size_t> coords;
  std::vector<unsigned> r;
  for (std::size_t j = 0; j < alg.p(); ++j) {
    const auto block = alg.block_coordinates(j);
    std::size_t best = block.front();
    unsigned best_m = 0;
    for (std::size_t k : block) {
      const unsigned m = (w[k] + alg.alpha(k) - 1) / alg.alpha(k);
      if (m > best_m) {
        best_m = m;
        best = k;
      }
    }
    coords.push_back(best);
    r.push_back(best_m == 0 ? alg.alpha(best) : w[best] - (best_m - 1) * alg.alpha(best));
  }
  return make_choice(alg, std::move(coords), std::move(r));
}

UEAElement g_s(const AlgebraPtr& alg, unsigned s, const UEAElement& u) {
  UEAElement cur = u;
  for (const auto& c : factor_choices(*alg))
    cur = g_ab(c.a, c.b, cur) - GaussianRational(c.g_shift(*alg, s)) * cur;
  return cur;
}

UEAElement h_s(const AlgebraPtr& alg, unsigned s, const UEAElement& u) {
  UEAElement cur = u;
  for (const auto& c : factor_choices(*alg))
    cur = h_ab(c.a, c.b, cur) - GaussianRational(c.h_shift(*alg, s)) * cur;
  return cur;
}

WeylOperator t_s(const AlgebraPtr& alg, unsigned s, const WeylOperator& w) {
  if (w.n() != alg->n()) throw DomainError("Weyl operator dimension does not match the algebra");
  WeylOperator cur = w;
  for (const auto& c : factor_choices(*alg))
    cur = h_ab_weyl(c.a, c.b, cur) - GaussianRational(c.h_shift(*alg, s)) * cur;
  return cur;
}

TaylorFrame weyl_frame(const AlgebraPtr& alg) {
  TaylorFrame f;
  for (std::size_t k = 0; k < alg->n(); ++k) {
    f.p.push_back(canonical_p(alg->n(), k));
    f.q.push_back(canonical_q(alg->n(), k));
  }
  f.delta = delta1(alg);
  return f;
}

WeylOperator h_frame(const TaylorFrame& f, const ScalarVector& a, const ScalarVector& b, const WeylOperator& w) {
  const std::size_t n = f.p.size();
  check_sizes(n, a, b);
  WeylOperator out(w.n());
  for (std::size_t k = 0; k < n; ++k) {
    if (!a[k].is_zero()) out += a[k] * commutator(-f.q[k], weyl_product(f.p[k], w));
    if (!b[k].is_zero()) out += b[k] * commutator(f.p[k], weyl_product(f.q[k], w));
  }
  return out;
}

WeylOperator a_coefficient(const TaylorFrame& f, const ScalarVector& a, const ScalarVector& b,
                           const WeylOperator& x, unsigned k) {
  const std::size_t n = f.p.size();
  check_sizes(n, a, b);
  WeylOperator out(x.n());
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].is_zero()) out += a[i] * weyl_product(weyl_product(f.p[i], x), ad_power(f.delta, f.q[i], k));
    if (!b[i].is_zero()) out -= b[i] * weyl_product(weyl_product(f.q[i], x), ad_power(f.delta, f.p[i], k));
  }
  return out;
}

std::vector<WeylOperator> taylor_coeffs(const TaylorFrame& f, const FactorList& factors, const WeylOperator& x,
                                        unsigned i) {
  std::vector<WeylOperator> c(i + 1, WeylOperator(x.n()));
  c[0] = x;
  for (const auto& [a, b] : factors) {
    std::vector<WeylOperator> next(i + 1, WeylOperator(x.n()));
    for (unsigned k = 0; k <= i; ++k) {
      next[k] = h_frame(f, a, b, c[k]);
      for (unsigned t = 0; t < k; ++t) {
        if (c[t].is_zero()) continue;
        next[k] += GaussianRational(Rational(binomial(k, t))) * a_coefficient(f, a, b, c[t], k - t);
      }
    }
    c = std::move(next);
  }
  return c;
}

WeylOperator taylor_residual(const TaylorFrame& f, const FactorList& factors, const WeylOperator& x, unsigned i) {
  WeylOperator lhs = weyl_product(x, power(f.delta, i));
  for (const auto& [a, b] : factors) lhs = h_frame(f, a, b, lhs);
  const auto c = taylor_coeffs(f, factors, x, i);
  for (unsigned k = 0; k <= i; ++k)
    lhs -= GaussianRational(Rational(binomial(i, k))) * weyl_product(c[k], power(f.delta, i - k));
  return lhs;
}

std::vector<Rational> b_roots(const Algebra& alg) {
  std::vector<Rational> out;
  for (const auto& c : factor_choices(alg)) {
    Rational v = Rational(static_cast<long>(alg.p()) - static_cast<long>(alg.n()));
    for (std::size_t j = 0; j < c.coords.size(); ++j) v -= ratio(c.r[j] + 1, alg.alpha(c.coords[j]));
    out.push_back(v);
  }
  return out;
}

RationalPolynomial b_polynomial(const Algebra& alg) {
  RationalPolynomial b(Rational(1));
  for (const auto& root : b_roots(alg)) b *= RationalPolynomial::linear(root, Rational(-1));
  return b;
}

PoleLattice pole_lattice(const Algebra& alg, unsigned q, const Rational& s0, long l_max) {
  PoleLattice out;
  out.q = q;
  out.s0 = s0;
  out.l_max = l_max;
  std::map<Rational, PoleEntry> byomega;
  const auto choices = factor_choices(alg);
  const auto roots = b_roots(alg);
  for (std::size_t c = 0; c < choices.size(); ++c) {
    // l >= sum (r+1)/alpha + n - p - s0 = -root - s0
    const Rational bound = -roots[c] - s0;
    Integer lo;
    mpz_cdiv_q(lo.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    for (long l = lo.get_si(); l <= l_max; ++l) {
      const Rational omega = (roots[c] - Rational(static_cast<long>(q)) + Rational(l)) / 2;
      PoleEntry& e = byomega[omega];
      e.omega = omega;
      ++e.multiplicity;
      PoleTriple t;
      for (std::size_t k : choices[c].coords) t.i.push_back(static_cast<unsigned>(k + 1));
      t.r = choices[c].r;
      t.l = l;
      e.triples.push_back(std::move(t));
    }
  }
  for (auto it = byomega.rbegin(); it != byomega.rend(); ++it) out.entries.push_back(std::move(it->second));
  return out;
}

Rational abscissa_candidate(const Algebra& alg, unsigned q) {
  const auto roots = b_roots(alg);
  Rational best = *std::min_element(roots.begin(), roots.end());
  return (best - Rational(static_cast<long>(q))) / 2;
}

std::vector<GenericPole> generic_pole_lattice(const std::vector<Rational>& roots, long q, unsigned r,
                                              const Rational& p, long l_max) {
  if (r == 0) throw DomainError("order r must be positive");
  std::map<Rational, GenericPole> byomega;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const Rational bound = -p - roots[k];
    Integer lo;
    mpz_cdiv_q(lo.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    for (long l = lo.get_si(); l <= l_max; ++l) {
      const Rational omega = (roots[k] - Rational(q) + Rational(l)) / Rational(static_cast<long>(r));
      GenericPole& g = byomega[omega];
      g.omega = omega;
      ++g.multiplicity;
      g.sources.emplace_back(k, l);
    }
  }
  std::vector<GenericPole> out;
  for (auto it = byomega.rbegin(); it != byomega.rend(); ++it) out.push_back(std::move(it->second));
  return out;
}

bool lagrange_identity_check(const RationalPolynomial& b, unsigned r, unsigned q, unsigned n_terms) {
  if (n_terms == 0) throw DomainError("at least one expansion term is needed for the interpolation nodes");
  const std::size_t deg = b.is_zero() ? 0 : static_cast<std::size_t>(b.degree());
  const std::size_t nodes = n_terms + deg;  // 0 .. N + deg(b) - 1
  const auto basis = lagrange_basis(nodes);
  RationalPolynomial lhs;
  for (std::size_t i = 0; i < nodes; ++i)
    lhs += RationalPolynomial(b(Rational(static_cast<long>(r * i + q)))) * basis[i];
  return lhs == b.compose_affine(Rational(r), Rational(q));
}

}  // namespace nilzeta
