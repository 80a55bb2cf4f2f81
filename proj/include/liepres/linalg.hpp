#pragma once

#include <map>
#include <vector>

#include "liepres/errors.hpp"
#include "liepres/rational.hpp"

namespace liepres {

// Sparse rational vector: coordinate index -> value, zeros never stored.
using QVec = std::map<int, Rational>;

inline void axpy(QVec& y, const Rational& a, const QVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, v] : x) {
    auto [it, inserted] = y.emplace(i, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// Incrementally maintained reduced echelon basis over Q.  Rows are kept
// fully reduced against each other, pivots normalized to 1, so membership
// tests are a single reduction.
class QEchelon {
 public:
  QVec reduce(QVec v) const {
    for (const auto& [pivot, row] : rows_) {
      auto it = v.find(pivot);
      if (it == v.end()) continue;
      axpy(v, -it->second, row);
    }
    return v;
  }

  // Adds v to the span; returns true when the rank grew.
  bool insert(QVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    int pivot = v.begin()->first;
    Rational lead = v.begin()->second;
    for (auto& [i, val] : v) val /= lead;
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it != row.end()) axpy(row, -it->second, v);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
  }

  bool contains(const QVec& v) const { return reduce(v).empty(); }
  size_t dim() const { return rows_.size(); }
  const std::map<int, QVec>& rows() const { return rows_; }

 private:
  std::map<int, QVec> rows_;  // pivot coordinate -> normalized row
};

// Dense rational matrix with exact Gauss-Jordan elimination.
class QDense {
 public:
  QDense(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  size_t row_count() const { return rows_; }
  size_t col_count() const { return cols_; }
  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  // In-place reduced row echelon form; returns the rank and (optionally)
  // the pivot column of each echelon row.
  size_t rref(std::vector<int>* pivot_cols = nullptr) {
    size_t rank = 0;
    if (pivot_cols) pivot_cols->clear();
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
      size_t sel = rank;
      while (sel < rows_ && at(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != rank) {
        for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(rank, j));
      }
      Rational inv = Rational(1) / at(rank, col);
      for (size_t j = col; j < cols_; ++j) at(rank, j) *= inv;
      for (size_t i = 0; i < rows_; ++i) {
        if (i == rank || at(i, col).is_zero()) continue;
        Rational f = at(i, col);
        for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(rank, j);
      }
      if (pivot_cols) pivot_cols->push_back(static_cast<int>(col));
      ++rank;
    }
    return rank;
  }

  // Basis of the right nullspace (consumes a copy).
  std::vector<std::vector<Rational>> nullspace() const {
    QDense m = *this;
    std::vector<int> pivots;
    size_t rank = m.rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<Rational> v(cols_);
      v[freec] = Rational(1);
      for (size_t r = 0; r < rank; ++r) {
        v[static_cast<size_t>(pivots[r])] = -m.at(r, freec);
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;           // one solution (when consistent)
  std::vector<std::vector<Rational>> kernel;  // homogeneous solution basis
  bool unique() const { return consistent && kernel.empty(); }
};

// Solves A x = b exactly.
inline LinearSolution solve_dense(const QDense& A, const std::vector<Rational>& b) {
  if (b.size() != A.row_count()) throw SizeMismatch("solve_dense: rhs length");
  size_t n = A.col_count();
  QDense aug(A.row_count(), n + 1);
  for (size_t i = 0; i < A.row_count(); ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n) = b[i];
  }
  std::vector<int> pivots;
  size_t rank = aug.rref(&pivots);
  LinearSolution sol;
  for (size_t r = 0; r < rank; ++r) {
    if (pivots[r] == static_cast<int>(n)) return sol;  // 0 = 1 row: inconsistent
  }
  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  for (size_t r = 0; r < rank; ++r) {
    sol.particular[static_cast<size_t>(pivots[r])] = aug.at(r, n);
  }
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  for (size_t freec = 0; freec < n; ++freec) {
    if (is_pivot[freec]) continue;
    std::vector<Rational> v(n);
    v[freec] = Rational(1);
    for (size_t r = 0; r < rank; ++r) {
      v[static_cast<size_t>(pivots[r])] = -aug.at(r, freec);
    }
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace liepres
