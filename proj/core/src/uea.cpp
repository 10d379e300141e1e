#include "nilzeta/uea.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nilzeta/error.hpp"

namespace nilzeta {

PBWMonomial PBWMonomial::variable(std::size_t num_vars, std::size_t var, unsigned power) {
  PBWMonomial m(num_vars);
  m.e_.at(var) = static_cast<std::uint16_t>(power);
  return m;
}

unsigned PBWMonomial::degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }

bool PBWMonomial::divides(const PBWMonomial& other) const {
  for (std::size_t v = 0; v < e_.size(); ++v)
    if (e_[v] > other.e_[v]) return false;
  return true;
}

std::strong_ordering monomial_compare(const PBWMonomial& a, const PBWMonomial& b) {
  if (a.size() != b.size()) throw DomainError("monomials of different algebras");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != b[v]) return a[v] <=> b[v];
  return std::strong_ordering::equal;
}

UEAElement::UEAElement(AlgebraPtr alg, const GaussianRational& scalar) : alg_(std::move(alg)) {
  add_term(PBWMonomial(alg_->num_variables()), scalar);
}

UEAElement UEAElement::monomial(AlgebraPtr alg, PBWMonomial m, GaussianRational c) {
  if (m.size() != alg->num_variables()) throw DomainError("monomial does not belong to this algebra");
  UEAElement u(std::move(alg));
  u.add_term(m, c);
  return u;
}

UEAElement UEAElement::variable(AlgebraPtr alg, std::size_t var, GaussianRational c) {
  const std::size_t nv = alg->num_variables();
  return monomial(std::move(alg), PBWMonomial::variable(nv, var), std::move(c));
}

UEAElement UEAElement::x(AlgebraPtr alg, unsigned k1) {
  const std::size_t v = alg->x_variable(k1);
  return variable(std::move(alg), v);
}

UEAElement UEAElement::y(AlgebraPtr alg, const MultiIndex& beta) {
  const std::size_t v = alg->y_variable(beta);
  return variable(std::move(alg), v);
}

GaussianRational UEAElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void UEAElement::add_term(const PBWMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void UEAElement::check_same(const UEAElement& o) const {
  if (!alg_->same_as(*o.alg_)) throw DomainError("elements of different algebras");
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

UEAElement UEAElement::operator-() const {
  UEAElement r(*this);
  r *= GaussianRational(-1);
  return r;
}

UEAElement operator*(const UEAElement& a, const UEAElement& b) { return normal_product(a, b); }

bool operator==(const UEAElement& a, const UEAElement& b) {
  return a.alg_->same_as(*b.alg_) && a.terms_ == b.terms_;
}

std::string monomial_to_string(const Algebra& alg, const PBWMonomial& m) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += alg.variable_name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

namespace {

// Coefficient text for the printed grammar: integers and fractions as is,
// imaginary parts with a trailing i, complex values as a sum in parentheses.
std::string coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return c.re().get_str();
  if (sgn(c.re()) == 0) return c.im().get_str() + "i";
  return "(" + c.re().get_str() + (sgn(c.im()) > 0 ? "+" : "") + c.im().get_str() + "i)";
}

}  // namespace

std::string UEAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest monomial first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    GaussianRational coef = c;
    bool negative = false;
    if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      coef = -c;
    }
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool unit = coef == GaussianRational(1);
    if (m.is_one()) {
      s += coefficient_text(coef);
    } else {
      if (!unit) s += coefficient_text(coef) + "*";
      s += monomial_to_string(*alg_, m);
    }
  }
  return s;
}

namespace {

using YPoly = std::map<PBWMonomial, GaussianRational, MonomialLess>;

void add_to(YPoly& p, const PBWMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// The derivation ad X_k on the commutative Y-part.
YPoly lower(const Algebra& alg, std::size_t k, const YPoly& p) {
  YPoly out;
  const std::size_t n = alg.n();
  for (const auto& [m, c] : p) {
    for (std::size_t j = 0; j < alg.num_y(); ++j) {
      const unsigned e = m[n + j];
      if (e == 0) continue;
      auto low = alg.lowered(k, j);
      if (!low) continue;
      PBWMonomial r = m;
      --r[n + j];
      ++r[n + *low];
      add_to(out, r, c * GaussianRational(static_cast<long>(e)));
    }
  }
  return out;
}

}  // namespace

UEAElement normal_product(const UEAElement& u, const UEAElement& v) {
  if (!u.algebra()->same_as(*v.algebra())) throw DomainError("elements of different algebras");
  const Algebra& alg = *u.algebra();
  const std::size_t n = alg.n();
  const std::size_t nv = alg.num_variables();
  UEAElement out(u.algebra());

  for (const auto& [m2, c2] : v.terms()) {
    // For each left term split X^p f; moving f past X^{p'} gives
    // sum_k C(p',k) (-1)^{|k|} X^{p'-k} (D^k f).
    for (const auto& [m1, c1] : u.terms()) {
      YPoly f;
      PBWMonomial fy = m1;
      for (std::size_t k = 0; k < n; ++k) fy[k] = 0;
      f.emplace(fy, GaussianRational(1));

      // Entries (remaining X exponent, scalar, D^k f).
      struct Stage {
        std::vector<unsigned> xrest;
        GaussianRational scale;
        YPoly poly;
      };
      std::vector<Stage> stages{{std::vector<unsigned>(n), c1 * c2, f}};
      for (std::size_t k = 0; k < n; ++k) {
        const unsigned pk = m2[k];
        if (pk == 0) continue;
        std::vector<Stage> next;
        for (auto& st : stages) {
          YPoly cur = st.poly;
          for (unsigned t = 0; t <= pk; ++t) {
            if (cur.empty()) break;
            GaussianRational s = st.scale * GaussianRational(Rational(binomial(pk, t)));
            if (t % 2) s = -s;
            Stage ns{st.xrest, s, cur};
            ns.xrest[k] = pk - t;
            next.push_back(std::move(ns));
            if (t < pk) cur = lower(alg, k, cur);
          }
        }
        stages = std::move(next);
      }
      for (const auto& st : stages) {
        for (const auto& [ym, yc] : st.poly) {
          PBWMonomial r(nv);
          for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<std::uint16_t>(m1[k] + st.xrest[k]);
          for (std::size_t j = n; j < nv; ++j) r[j] = static_cast<std::uint16_t>(ym[j] + m2[j]);
          out.add_term(r, st.scale * yc);
        }
      }
    }
  }
  return out;
}

UEAElement commutator(const UEAElement& u, const UEAElement& v) {
  return normal_product(u, v) - normal_product(v, u);
}

std::pair<PBWMonomial, GaussianRational> leading_term(const UEAElement& u) {
  if (u.is_zero()) throw DomainError("leading term of the zero element");
  const auto& last = *u.terms().rbegin();
  return {last.first, last.second};
}

unsigned degree(const UEAElement& u) { return leading_term(u).first.degree(); }

PBWMonomial unit_y_power(const Algebra& alg, const MultiIndex& gamma) {
  if (gamma.size() != alg.n()) throw DomainError("multi-index of the wrong length");
  PBWMonomial m(alg.num_variables());
  for (std::size_t k = 0; k < alg.n(); ++k) {
    if (gamma[k] == 0) continue;
    m[alg.y_variable(MultiIndex::unit(alg.n(), k))] = static_cast<std::uint16_t>(gamma[k]);
  }
  return m;
}

UEAElement y_star(const AlgebraPtr& alg, const MultiIndex& gamma) {
  return UEAElement::monomial(alg, unit_y_power(*alg, gamma),
                              GaussianRational::i_pow(1 - static_cast<long>(gamma.degree())));
}

UEAElement gamma_operator(const UEAElement& u) {
  const AlgebraPtr& alg = u.algebra();
  UEAElement cur = u;
  for (unsigned k1 = 1; k1 <= alg->n(); ++k1) {
    const UEAElement xj = UEAElement::x(alg, k1);
    const UEAElement yj = UEAElement::y(alg, MultiIndex::unit(alg->n(), k1 - 1));
    UEAElement sum(alg);
    UEAElement ad = cur;          // (ad X_j)^k cur
    UEAElement ypow(alg, 1);      // (Y^{delta^j})^k
    Rational inv_fact = 1;
    for (unsigned k = 0; !ad.is_zero(); ++k) {
      if (k > 0) {
        ad = commutator(xj, ad);
        if (ad.is_zero()) break;
        ypow = normal_product(ypow, yj);
        inv_fact /= k;
      }
      sum += normal_product(GaussianRational::i_pow(k) * GaussianRational(inv_fact) * ypow, ad);
    }
    cur = std::move(sum);
  }
  return cur;
}

UEAElement gamma_closed_form(const AlgebraPtr& alg, const MultiIndex& beta) {
  alg->y_variable(beta);
  UEAElement out(alg);
  for (const auto& g : beta.lower_set()) {
    GaussianRational c(Rational(1, 1) / Rational(g.factorial()));
    if (g.degree() % 2) c = -c;
    out += c * normal_product(y_star(alg, g), UEAElement::y(alg, beta - g));
  }
  return out;
}

UEAElement gamma_apply(const AlgebraPtr& alg, const MultiIndex& beta) {
  const UEAElement closed = gamma_closed_form(alg, beta);
  const UEAElement op = gamma_operator(GaussianRational::i() * UEAElement::y(alg, beta));
  if (!(op == closed))
    throw std::logic_error("Gamma operator and closed form disagree for beta=" + beta.to_string());
  return op;
}

namespace {

void enumerate(std::size_t nv, std::size_t v, unsigned remaining, bool exact, PBWMonomial& cur,
               std::vector<PBWMonomial>& out) {
  if (v == nv) {
    if (!exact || remaining == 0) out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[v] = static_cast<std::uint16_t>(e);
    enumerate(nv, v + 1, remaining - e, exact, cur, out);
  }
  cur[v] = 0;
}

}  // namespace

std::vector<PBWMonomial> monomials_up_to(const Algebra& alg, unsigned d) {
  std::vector<PBWMonomial> out;
  PBWMonomial cur(alg.num_variables());
  enumerate(alg.num_variables(), 0, d, false, cur, out);
  std::sort(out.begin(), out.end(), MonomialLess());
  return out;
}

std::vector<PBWMonomial> monomials_of_degree(const Algebra& alg, unsigned d) {
  std::vector<PBWMonomial> out;
  PBWMonomial cur(alg.num_variables());
  enumerate(alg.num_variables(), 0, d, true, cur, out);
  std::sort(out.begin(), out.end(), MonomialLess());
  return out;
}

MultiIndex y_weight(const Algebra& alg, const PBWMonomial& m) {
  MultiIndex w(alg.n());
  for (std::size_t j = 0; j < alg.num_y(); ++j) {
    const unsigned q = m[alg.n() + j];
    if (q == 0) continue;
    const MultiIndex& beta = alg.index_set()[j];
    for (std::size_t k = 0; k < alg.n(); ++k) w[k] += q * beta[k];
  }
  return w;
}

MultiIndex x_exponents(const Algebra& alg, const PBWMonomial& m) {
  MultiIndex p(alg.n());
  for (std::size_t k = 0; k < alg.n(); ++k) p[k] = m[k];
  return p;
}

}  // namespace nilzeta
