#include "liepres/sparse_matrix.hpp"

#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

SparseMatrix SparseMatrix::unit(int n, int i, int j, const MultiPoly& c) {
  SparseMatrix m(n);
  m.set(i, j, c);
  return m;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n);
  for (int i = 1; i <= n; ++i) m.set(i, i, MultiPoly::constant(1));
  return m;
}

const MultiPoly& SparseMatrix::entry(int i, int j) const {
  static const MultiPoly kZero;
  if (i < 1 || i > n_ || j < 1 || j > n_) throw SizeMismatch("SparseMatrix::entry out of range");
  auto it = entries_.find(key(i, j));
  return it == entries_.end() ? kZero : it->second;
}

void SparseMatrix::set(int i, int j, const MultiPoly& value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw SizeMismatch("SparseMatrix::set out of range");
  if (value.is_zero()) {
    entries_.erase(key(i, j));
  } else {
    entries_[key(i, j)] = value;
  }
}

void SparseMatrix::add(int i, int j, const MultiPoly& value) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw SizeMismatch("SparseMatrix::add out of range");
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.emplace(key(i, j), value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

void SparseMatrix::check_same_size(const SparseMatrix& o) const {
  if (n_ != o.n_) {
    throw SizeMismatch("SparseMatrix: size " + std::to_string(n_) + " vs " + std::to_string(o.n_));
  }
}

SparseMatrix SparseMatrix::operator-() const {
  SparseMatrix r(n_);
  for (const auto& [k, v] : entries_) r.entries_.emplace_hint(r.entries_.end(), k, -v);
  return r;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  check_same_size(o);
  for (const auto& [k, v] : o.entries_) {
    auto [it, inserted] = entries_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  check_same_size(o);
  for (const auto& [k, v] : o.entries_) {
    auto [it, inserted] = entries_.emplace(k, -v);
    if (!inserted) {
      it->second -= v;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  check_same_size(o);
  // Row-major sparse product: group o's entries by row once.
  SparseMatrix r(n_);
  auto row_begin = [&](int i) { return o.entries_.lower_bound(key(i, 0)); };
  for (const auto& [ka, va] : entries_) {
    int i = static_cast<int>(ka >> 32);
    int k = static_cast<int>(ka & 0xffffffffu);
    for (auto it = row_begin(k); it != o.entries_.end() && static_cast<int>(it->first >> 32) == k;
         ++it) {
      int j = static_cast<int>(it->first & 0xffffffffu);
      r.add(i, j, va * it->second);
    }
  }
  return r;
}

SparseMatrix SparseMatrix::scaled(const MultiPoly& c) const {
  SparseMatrix r(n_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : entries_) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) r.entries_.emplace_hint(r.entries_.end(), k, std::move(prod));
  }
  return r;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix r(n_);
  for (const auto& [k, v] : entries_) {
    int i = static_cast<int>(k >> 32);
    int j = static_cast<int>(k & 0xffffffffu);
    r.entries_.emplace(key(j, i), v);
  }
  return r;
}

MultiPoly SparseMatrix::trace() const {
  MultiPoly t;
  for (int i = 1; i <= n_; ++i) t += entry(i, i);
  return t;
}

SparseMatrix SparseMatrix::bracket(const SparseMatrix& a, const SparseMatrix& b) {
  return a * b - b * a;
}

SparseMatrix SparseMatrix::evaluate(Var v, const Rational& value) const {
  SparseMatrix r(n_);
  for (const auto& [k, entry] : entries_) {
    MultiPoly e = entry.evaluate(v, value);
    if (!e.is_zero()) r.entries_.emplace_hint(r.entries_.end(), k, std::move(e));
  }
  return r;
}

std::string SparseMatrix::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << (k >> 32) << "," << (k & 0xffffffffu) << "): " << v.to_string();
  }
  return os.str();
}

}  // namespace liepres
