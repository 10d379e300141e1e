#include "nilzeta/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "nilzeta/error.hpp"

namespace nilzeta {

WeylOperator::WeylOperator(std::size_t n, const GaussianRational& scalar) : n_(n) {
  add_term(Key(2 * n, 0), scalar);
}

WeylOperator WeylOperator::term(const MultiIndex& a, const MultiIndex& b, GaussianRational c) {
  if (a.size() != b.size()) throw DomainError("x and d exponents of different lengths");
  WeylOperator w(a.size());
  Key k(2 * a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    k[j] = static_cast<std::uint16_t>(a[j]);
    k[a.size() + j] = static_cast<std::uint16_t>(b[j]);
  }
  w.add_term(k, c);
  return w;
}

WeylOperator WeylOperator::x(std::size_t n, std::size_t k, unsigned power) {
  WeylOperator w(n);
  Key key(2 * n, 0);
  key.at(k) = static_cast<std::uint16_t>(power);
  w.add_term(key, 1);
  return w;
}

WeylOperator WeylOperator::d(std::size_t n, std::size_t k, unsigned power) {
  WeylOperator w(n);
  Key key(2 * n, 0);
  key.at(n + k) = static_cast<std::uint16_t>(power);
  w.add_term(key, 1);
  return w;
}

GaussianRational WeylOperator::coefficient(const MultiIndex& a, const MultiIndex& b) const {
  Key k(2 * n_);
  for (std::size_t j = 0; j < n_; ++j) {
    k[j] = static_cast<std::uint16_t>(a[j]);
    k[n_ + j] = static_cast<std::uint16_t>(b[j]);
  }
  auto it = terms_.find(k);
  return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned WeylOperator::total_degree() const {
  unsigned best = 0;
  for (const auto& [k, c] : terms_) best = std::max(best, std::accumulate(k.begin(), k.end(), 0U));
  return best;
}

bool WeylOperator::is_real() const {
  for (const auto& [k, c] : terms_)
    if (!c.is_real()) return false;
  return true;
}

void WeylOperator::add_term(const Key& k, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  if (o.n_ != n_) throw DomainError("Weyl operators in different dimensions");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  if (o.n_ != n_) throw DomainError("Weyl operators in different dimensions");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

WeylOperator WeylOperator::operator-() const {
  WeylOperator r(*this);
  r *= GaussianRational(-1);
  return r;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) { return weyl_product(a, b); }

namespace {

std::string factor_text(char var, std::size_t j, unsigned e) {
  std::string s = std::string(1, var) + std::to_string(j + 1);
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string WeylOperator::to_string() const {
  if (terms_.empty()) return "0";
  // Lower total order first, which puts the constant term in front.
  std::vector<std::pair<Key, GaussianRational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    return std::accumulate(l.first.begin(), l.first.end(), 0U) <
           std::accumulate(r.first.begin(), r.first.end(), 0U);
  });
  std::string s;
  for (const auto& [k, c] : ordered) {
    std::string mono;
    for (std::size_t j = 0; j < n_; ++j)
      if (k[j]) mono += (mono.empty() ? "" : "*") + factor_text('x', j, k[j]);
    for (std::size_t j = 0; j < n_; ++j)
      if (k[n_ + j]) mono += (mono.empty() ? "" : "*") + factor_text('d', j, k[n_ + j]);
    GaussianRational coef = c;
    bool negative = false;
    if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      coef = -c;
    }
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string ctext = coef.is_real() || sgn(coef.re()) == 0 ? coef.to_string() : "(" + coef.to_string() + ")";
    if (mono.empty())
      s += ctext;
    else if (coef == GaussianRational(1))
      s += mono;
    else
      s += ctext + "*" + mono;
  }
  return s;
}

std::string WeylOperator::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [k, c] : terms_) {
    nlohmann::ordered_json t;
    t["x"] = std::vector<unsigned>(k.begin(), k.begin() + static_cast<long>(n_));
    t["d"] = std::vector<unsigned>(k.begin() + static_cast<long>(n_), k.end());
    t["re"] = rational_to_fraction(c.re());
    t["im"] = rational_to_fraction(c.im());
    arr.push_back(std::move(t));
  }
  return arr.dump();
}

WeylOperator weyl_product(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n()) throw DomainError("Weyl operators in different dimensions");
  const std::size_t n = a.n();
  WeylOperator out(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      // d^{b1} x^{c} = sum_k C(b1,k) c!/(c-k)! x^{c-k} d^{b1-k}, per coordinate.
      std::vector<std::pair<WeylOperator::Key, Integer>> partial{{WeylOperator::Key(2 * n, 0), Integer(1)}};
      for (std::size_t j = 0; j < n; ++j) {
        const unsigned bj = ka[n + j], cj = kb[j];
        std::vector<std::pair<WeylOperator::Key, Integer>> next;
        for (const auto& [key, coef] : partial) {
          Integer falling = 1;
          for (unsigned k = 0; k <= std::min(bj, cj); ++k) {
            if (k > 0) falling *= (cj - k + 1);
            WeylOperator::Key nk = key;
            nk[j] = static_cast<std::uint16_t>(ka[j] + cj - k);
            nk[n + j] = static_cast<std::uint16_t>(bj + kb[n + j] - k);
            next.emplace_back(std::move(nk), coef * binomial(bj, k) * falling);
          }
        }
        partial = std::move(next);
      }
      const GaussianRational c = ca * cb;
      for (const auto& [key, coef] : partial) out.add_term(key, c * GaussianRational(Rational(coef)));
    }
  }
  return out;
}

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) {
  return weyl_product(a, b) - weyl_product(b, a);
}

WeylOperator power(const WeylOperator& a, unsigned k) {
  WeylOperator r(a.n(), GaussianRational(1));
  for (unsigned j = 0; j < k; ++j) r = weyl_product(r, a);
  return r;
}

WeylOperator rho_monomial(const Algebra& alg, const PBWMonomial& m) {
  const std::size_t n = alg.n();
  // rho(X^p Y^q) = (-1)^{|p|} c d^p x^gamma with gamma = sum q_beta beta.
  GaussianRational c(1);
  unsigned psum = 0;
  for (std::size_t k = 0; k < n; ++k) psum += m[k];
  if (psum % 2) c = -c;
  for (std::size_t j = 0; j < alg.num_y(); ++j) {
    const unsigned q = m[n + j];
    if (q == 0) continue;
    const MultiIndex& beta = alg.index_set()[j];
    GaussianRational f = GaussianRational::i() / GaussianRational(Rational(beta.factorial()));
    if (beta.degree() % 2) f = -f;
    for (unsigned t = 0; t < q; ++t) c *= f;
  }
  const MultiIndex gamma = y_weight(alg, m);
  MultiIndex p(n);
  for (std::size_t k = 0; k < n; ++k) p[k] = m[k];
  WeylOperator dpart = WeylOperator::term(MultiIndex(n), p, c);
  WeylOperator xpart = WeylOperator::term(gamma, MultiIndex(n), 1);
  return weyl_product(dpart, xpart);
}

WeylOperator rho(const UEAElement& u) {
  const Algebra& alg = *u.algebra();
  WeylOperator out(alg.n());
  for (const auto& [m, c] : u.terms()) out += c * rho_monomial(alg, m);
  return out;
}

UEAElement laplacian_element(const AlgebraPtr& alg) {
  UEAElement sum(alg);
  for (std::size_t v = 0; v < alg->num_variables(); ++v) {
    const UEAElement e = UEAElement::variable(alg, v);
    sum += normal_product(e, e);
  }
  return UEAElement(alg, 1) - sum;
}

WeylOperator delta1(const AlgebraPtr& alg) { return rho(laplacian_element(alg)); }

WeylOperator ad_power(const WeylOperator& d, const WeylOperator& x, unsigned k) {
  WeylOperator cur = x;
  for (unsigned j = 0; j < k; ++j) cur = commutator(d, cur);
  return cur;
}

WeylOperator commutator_power_check(const WeylOperator& d, const WeylOperator& x, unsigned i) {
  WeylOperator residual = commutator(power(d, i), x);
  for (unsigned k = 1; k <= i; ++k) {
    const GaussianRational c(Rational(binomial(i, k)));
    residual -= c * weyl_product(ad_power(d, x, k), power(d, i - k));
  }
  return residual;
}

WeylOperator canonical_p(std::size_t n, std::size_t k) { return -WeylOperator::d(n, k); }
WeylOperator canonical_q(std::size_t n, std::size_t k) { return -WeylOperator::x(n, k); }

UEAElement rescaled_y(const AlgebraPtr& alg, std::size_t k) {
  return GaussianRational(Rational(0), Rational(-1)) * UEAElement::y(alg, MultiIndex::unit(alg->n(), k));
}

}  // namespace nilzeta
