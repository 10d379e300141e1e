#pragma once

#include <iterator>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilzeta/gaussian_rational.hpp"

namespace nilzeta {

/// Incremental echelon form of sparse vectors over Q(i). Each stored row
/// is normalized so that its largest key (its pivot) has coefficient 1 and
/// no two rows share a pivot.
template <class Key, class Less = std::less<Key>>
class SparseEchelon {
 public:
  using Vec = std::map<Key, GaussianRational, Less>;

  struct Reduction {
    Vec remainder;
    /// w = remainder + sum coef * row(index)
    std::vector<std::pair<std::size_t, GaussianRational>> used;
  };

  std::size_t size() const { return rows_.size(); }
  const Vec& row(std::size_t r) const { return rows_[r]; }
  const Key& pivot(std::size_t r) const { return rows_[r].rbegin()->first; }

  std::optional<std::size_t> row_with_pivot(const Key& k) const {
    auto it = pivots_.find(k);
    if (it == pivots_.end()) return std::nullopt;
    return it->second;
  }

  Reduction reduce(Vec w) const {
    Reduction out;
    if (w.empty()) return out;
    auto it = std::prev(w.end());
    while (true) {
      auto p = pivots_.find(it->first);
      if (p != pivots_.end()) {
        const Key bound = it->first;
        const GaussianRational c = it->second;
        for (const auto& [k, v] : rows_[p->second]) add(w, k, -(c * v));
        out.used.emplace_back(p->second, c);
        it = w.lower_bound(bound);
        if (it == w.begin()) break;
        --it;
      } else {
        if (it == w.begin()) break;
        --it;
      }
    }
    out.remainder = std::move(w);
    return out;
  }

  /// Adds a reduced, nonzero vector as a new row (normalizing it). Returns
  /// the normalization factor 1/lead.
  GaussianRational add_row(Vec reduced) {
    const GaussianRational inv = GaussianRational(1) / reduced.rbegin()->second;
    for (auto& [k, v] : reduced) v *= inv;
    pivots_.emplace(reduced.rbegin()->first, rows_.size());
    rows_.push_back(std::move(reduced));
    return inv;
  }

  static void add(Vec& w, const Key& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = w.emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) w.erase(it);
    }
  }

 private:
  std::vector<Vec> rows_;
  std::map<Key, std::size_t, Less> pivots_;
};

}  // namespace nilzeta
