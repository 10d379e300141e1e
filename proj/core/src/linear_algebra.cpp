#include "nilzeta/linear_algebra.hpp"

#include <stdexcept>

namespace nilzeta {

void ExactMatrix::append_row(const std::vector<GaussianRational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> ExactMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t k = r; k < rows_; ++k) {
      if (!(*this)(k, c).is_zero()) {
        sel = k;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(r, j));
    const GaussianRational inv = GaussianRational(1) / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) *= inv;
    for (std::size_t k = 0; k < rows_; ++k) {
      if (k == r || (*this)(k, c).is_zero()) continue;
      const GaussianRational f = (*this)(k, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(k, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ExactMatrix::rank() const {
  ExactMatrix copy(*this);
  return copy.rref().size();
}

std::vector<std::vector<GaussianRational>> ExactMatrix::null_space() const {
  ExactMatrix m(*this);
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(cols_);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nilzeta
