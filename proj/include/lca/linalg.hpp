#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lca/rational.hpp"

namespace lca {

/// Small dense matrix over an exact field. Only what the rank and nullspace
/// computations need.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && (*this)(sel, col) == 0) ++sel;
      if (sel == rows_) continue;
      if (sel != row) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(sel, c), (*this)(row, c));
      }
      Scalar inv = Scalar(1) / (*this)(row, col);
      for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == row || (*this)(r, col) == 0) continue;
        Scalar factor = (*this)(r, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= factor * (*this)(row, c);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    DenseMatrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of {v : M v = 0}.
  std::vector<std::vector<Scalar>> nullspace() const {
    DenseMatrix red = *this;
    auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Scalar> v(cols_);
      v[free] = 1;
      for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

using SparseVec = std::map<int, Rat>;

/// Incremental row echelon basis of sparse vectors; used for exact ranks of
/// graded components.
class SparseEchelon {
 public:
  /// Adds `v` to the span; returns true if it was independent.
  bool insert(SparseVec v) {
    while (!v.empty()) {
      auto [pivot, lead] = *v.begin();
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        Rat inv = 1 / lead;
        for (auto& [k, c] : v) c *= inv;
        rows_.emplace(pivot, std::move(v));
        return true;
      }
      for (const auto& [k, c] : it->second) {
        Rat& slot = v[k];
        slot -= lead * c;
        if (slot == 0) v.erase(k);
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<int, SparseVec> rows_;
};

}  // namespace lca
