#pragma once

#include <cstddef>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"

namespace nilzeta {

/// Dense exact matrix over Q(i), row-major. Small sizes only (structure
/// constant tables, subspace spans); the degree slices use their own
/// sparse elimination.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void append_row(const std::vector<GaussianRational>& row);

  /// In-place reduced row echelon form; returns the pivot columns in
  /// increasing order. Pivoting picks the first row with a nonzero
  /// entry in the current column, so the result is deterministic.
  std::vector<std::size_t> rref();

  std::size_t rank() const;

  /// Basis of {x : A x = 0}, one vector per free column, with a 1 at
  /// the free column (the standard RREF null-space basis).
  std::vector<std::vector<GaussianRational>> null_space() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> a_;
};

}  // namespace nilzeta
