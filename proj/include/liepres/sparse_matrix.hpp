#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "liepres/multipoly.hpp"

namespace liepres {

// Square sparse matrix over MultiPoly with 1-based indices.
class SparseMatrix {
 public:
  // (i,j) packed as i*2^32+j keeps row-major iteration order.
  using EntryMap = std::map<uint64_t, MultiPoly>;

  SparseMatrix() : n_(0) {}
  explicit SparseMatrix(int n) : n_(n) {}

  // Elementary matrix c * E_{i,j}.
  static SparseMatrix unit(int n, int i, int j, const MultiPoly& c = MultiPoly::constant(1));
  static SparseMatrix identity(int n);

  int size() const { return n_; }
  bool is_zero() const { return entries_.empty(); }
  size_t entry_count() const { return entries_.size(); }
  const EntryMap& entries() const { return entries_; }

  const MultiPoly& entry(int i, int j) const;
  void set(int i, int j, const MultiPoly& value);
  void add(int i, int j, const MultiPoly& value);

  SparseMatrix operator-() const;
  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  SparseMatrix operator*(const SparseMatrix& o) const;  // matrix product
  SparseMatrix scaled(const MultiPoly& c) const;
  SparseMatrix transpose() const;
  MultiPoly trace() const;

  // AB - BA.
  static SparseMatrix bracket(const SparseMatrix& a, const SparseMatrix& b);

  bool operator==(const SparseMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }

  // Per-variable substitution applied to every entry.
  SparseMatrix evaluate(Var v, const Rational& value) const;

  std::string to_string() const;  // sparse "(i,j): entry" listing

 private:
  static uint64_t key(int i, int j) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(i)) << 32) | static_cast<uint32_t>(j);
  }
  void check_same_size(const SparseMatrix& o) const;

  int n_;
  EntryMap entries_;
};

}  // namespace liepres
