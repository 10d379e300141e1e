#include "nilzeta/ideal.hpp"

#include <algorithm>
#include <deque>

#include "nilzeta/error.hpp"

namespace nilzeta {

std::vector<IdealGenerator> product_generators(const AlgebraPtr& alg) {
  std::vector<IdealGenerator> out;
  for (const auto& beta : alg->index_set()) {
    UEAElement g = y_star(alg, beta);
    g -= GaussianRational(Rational(beta.factorial())) * UEAElement::y(alg, beta);
    out.push_back({beta, std::move(g)});
  }
  return out;
}

std::vector<IdealGenerator> gamma_generators(const AlgebraPtr& alg) {
  std::vector<IdealGenerator> out;
  const MultiIndex zero(alg->n());
  out.push_back({zero, UEAElement::y(alg, zero) - UEAElement(alg, GaussianRational::i())});
  for (const auto& beta : alg->index_set())
    if (beta.degree() >= 2) out.push_back({beta, gamma_apply(alg, beta)});
  return out;
}

bool is_member(const UEAElement& u) { return rho(u).is_zero(); }

bool DegreeSlice::in_T(const PBWMonomial& m) const {
  return std::binary_search(t_set.begin(), t_set.end(), m, MonomialLess());
}

Ideal::Ideal(AlgebraPtr alg, unsigned cap) : alg_(std::move(alg)), cap_(cap) {}

void Ideal::extend_to(unsigned d) {
  if (d > cap_)
    throw LimitError("slice degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap_));
  for (unsigned deg = static_cast<unsigned>(built_ + 1); deg <= d; ++deg) {
    for (const auto& m : monomials_of_degree(*alg_, deg)) {
      const WeylOperator img = rho_monomial(*alg_, m);
      SparseEchelon<WeylOperator::Key>::Vec v(img.terms().begin(), img.terms().end());
      auto red = echelon_.reduce(std::move(v));
      UEAElement comb(alg_);
      for (const auto& [r, c] : red.used) comb += c * row_preimage_[r];
      monomials_.push_back(m);
      if (red.remainder.empty()) {
        in_t_.push_back(true);
        canonical_.emplace(m, comb);
      } else {
        in_t_.push_back(false);
        const GaussianRational inv = echelon_.add_row(std::move(red.remainder));
        UEAElement pre = UEAElement::monomial(alg_, m) - comb;
        row_preimage_.push_back(inv * pre);
        canonical_.emplace(m, UEAElement::monomial(alg_, m));
      }
    }
    built_ = static_cast<int>(deg);
  }
}

const DegreeSlice& Ideal::slice(unsigned d) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (auto it = slices_.find(d); it != slices_.end()) return it->second;
  extend_to(d);
  DegreeSlice s;
  s.degree = d;
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    const PBWMonomial& m = monomials_[k];
    if (m.degree() > d) break;
    s.monomials.push_back(m);
    s.in_t.push_back(in_t_[k]);
    if (in_t_[k]) {
      s.t_set.push_back(m);
      s.kernel_basis.push_back(UEAElement::monomial(alg_, m) - canonical_.at(m));
    } else {
      s.o_set.push_back(m);
    }
  }
  return slices_.emplace(d, std::move(s)).first->second;
}

UEAElement Ideal::canonical_form(const UEAElement& u) {
  if (u.is_zero()) return u;
  std::lock_guard<std::mutex> lock(mutex_);
  extend_to(std::max(built_, static_cast<int>(degree(u))));
  UEAElement out(alg_);
  for (const auto& [m, c] : u.terms()) out += c * canonical_.at(m);
  return out;
}

bool Ideal::is_leading_term(const PBWMonomial& m) {
  std::lock_guard<std::mutex> lock(mutex_);
  extend_to(std::max(built_, static_cast<int>(m.degree())));
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), m, MonomialLess());
  return in_t_[static_cast<std::size_t>(it - monomials_.begin())];
}

std::optional<UEAElement> Ideal::solve(const WeylOperator& w) {
  if (w.n() != alg_->n()) throw DomainError("Weyl operator dimension does not match the algebra");
  if (built_ < 0) extend_to(0);
  while (true) {
    SparseEchelon<WeylOperator::Key>::Vec v(w.terms().begin(), w.terms().end());
    auto red = echelon_.reduce(std::move(v));
    if (red.remainder.empty()) {
      UEAElement comb(alg_);
      for (const auto& [r, c] : red.used) comb += c * row_preimage_[r];
      return comb;
    }
    if (built_ >= static_cast<int>(cap_)) return std::nullopt;
    extend_to(static_cast<unsigned>(built_ + 1));
  }
}

std::optional<UEAElement> Ideal::preimage(const WeylOperator& w) {
  std::lock_guard<std::mutex> lock(mutex_);
  return solve(w);
}

std::optional<int> Ideal::filtration_min_degree(const WeylOperator& w) {
  if (w.is_zero()) return -1;
  std::lock_guard<std::mutex> lock(mutex_);
  auto pre = solve(w);
  if (!pre) return std::nullopt;
  // The preimage is supported on O, so its degree is the minimal one.
  return static_cast<int>(degree(*pre));
}

DegreeSlice build_slice(const AlgebraPtr& alg, unsigned d) {
  Ideal ideal(alg, std::max(d, Ideal::kDefaultCap));
  return ideal.slice(d);
}

std::optional<int> filtration_min_degree(const WeylOperator& w, const AlgebraPtr& alg, unsigned cap) {
  Ideal ideal(alg, cap);
  return ideal.filtration_min_degree(w);
}

GeneratedSpan::GeneratedSpan(const AlgebraPtr& alg, const std::vector<UEAElement>& generators,
                             unsigned max_degree)
    : alg_(alg), max_degree_(max_degree) {
  using Vec = SparseEchelon<PBWMonomial, MonomialLess>::Vec;
  std::deque<UEAElement> queue;
  for (const auto& g : generators)
    if (!g.is_zero() && degree(g) <= max_degree) queue.push_back(g);
  std::vector<UEAElement> vars;
  for (std::size_t v = 0; v < alg->num_variables(); ++v) vars.push_back(UEAElement::variable(alg, v));

  while (!queue.empty()) {
    UEAElement u = std::move(queue.front());
    queue.pop_front();
    Vec vec(u.terms().begin(), u.terms().end());
    auto red = echelon_.reduce(std::move(vec));
    if (red.remainder.empty()) continue;
    UEAElement r(alg);
    for (const auto& [m, c] : red.remainder) r.add_term(m, c);
    echelon_.add_row(std::move(red.remainder));
    if (degree(r) + 1 > max_degree) continue;
    for (const auto& x : vars) {
      queue.push_back(normal_product(x, r));
      queue.push_back(normal_product(r, x));
    }
  }
}

std::size_t GeneratedSpan::dimension(unsigned d) const { return leading_terms(d).size(); }

std::vector<PBWMonomial> GeneratedSpan::leading_terms(unsigned d) const {
  std::vector<PBWMonomial> out;
  for (std::size_t r = 0; r < echelon_.size(); ++r)
    if (echelon_.pivot(r).degree() <= d) out.push_back(echelon_.pivot(r));
  std::sort(out.begin(), out.end(), MonomialLess());
  return out;
}

}  // namespace nilzeta
