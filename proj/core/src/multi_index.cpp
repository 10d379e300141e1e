#include "nilzeta/multi_index.hpp"

#include <numeric>

#include "nilzeta/error.hpp"

namespace nilzeta {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t k) {
  MultiIndex m(n);
  m.e_.at(k) = 1;
  return m;
}

unsigned MultiIndex::degree() const { return std::accumulate(e_.begin(), e_.end(), 0U); }

Integer MultiIndex::factorial() const {
  Integer r = 1;
  for (unsigned v : e_) r *= nilzeta::factorial(v);
  return r;
}

bool MultiIndex::precedes(const MultiIndex& other) const {
  if (other.size() != size()) throw DomainError("multi-index length mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > other.e_[k]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.size() != size()) throw DomainError("multi-index length mismatch");
  MultiIndex r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (!o.precedes(*this)) throw DomainError("multi-index difference would be negative");
  MultiIndex r(*this);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

std::vector<MultiIndex> MultiIndex::lower_set() const {
  std::vector<MultiIndex> out;
  MultiIndex cur(size());
  // Odometer with the last coordinate fastest gives lexicographic order.
  while (true) {
    out.push_back(cur);
    std::size_t k = size();
    while (k > 0 && cur.e_[k - 1] == e_[k - 1]) --k;
    if (k == 0) return out;
    ++cur.e_[k - 1];
    for (std::size_t j = k; j < size(); ++j) cur.e_[j] = 0;
  }
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

Integer multi_binomial(const MultiIndex& beta, const MultiIndex& gamma) {
  if (!gamma.precedes(beta)) return 0;
  Integer r = 1;
  for (std::size_t k = 0; k < beta.size(); ++k) r *= binomial(beta[k], gamma[k]);
  return r;
}

}  // namespace nilzeta
