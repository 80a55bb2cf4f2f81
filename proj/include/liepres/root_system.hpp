#pragma once

#include <map>
#include <string>
#include <vector>

#include "liepres/rational.hpp"

namespace liepres {

// Cartan matrix plus root lengths; everything else is derived from it.
struct DynkinData {
  std::string key;
  int rank = 0;
  // a[i][j] = (alpha_i, alpha_j) / d_i  (so a[i][i] = 2), 0-based.
  std::vector<std::vector<int>> cartan;
  // d[i] = (alpha_i, alpha_i) / 2: 1 for short/simply-laced, 2 or 3 for long.
  std::vector<int> dvec;
};

// Supported keys: a2..a8, b3, c3, d4 (cross-check material) and the
// exceptional g2, f4, e6, e7, e8 with the node numbering the generator
// tables use: eN is the chain 1-2-...-(N-1) with node N attached to the
// middle (3 for e6, 4 for e7, 5 for e8); f4 is the chain 1-2-3-4 with
// nodes 1 and 2 short; g2 has node 1 short.
DynkinData dynkin_for(const std::string& key);  // throws UnknownType

// Positive roots of a finite root system as simple-root coefficient
// vectors, enumerated by string closure and ordered by (height, lex).
class RootSystem {
 public:
  explicit RootSystem(DynkinData data);

  const DynkinData& data() const { return data_; }
  int rank() const { return data_.rank; }
  size_t positive_count() const { return positives_.size(); }
  size_t dimension() const { return 2 * positives_.size() + data_.rank; }

  const std::vector<int>& positive(int index) const { return positives_[index]; }
  const std::vector<std::vector<int>>& positives() const { return positives_; }
  int height(int index) const { return heights_[index]; }

  // Index of a coefficient vector among the positive roots; -1 if absent.
  int index_of(const std::vector<int>& coeffs) const;
  bool is_positive_root(const std::vector<int>& coeffs) const { return index_of(coeffs) >= 0; }

  // <beta, alpha_i^vee> = sum_j beta_j a_ij   (i 0-based).
  long pairing_with_simple_coroot(const std::vector<int>& beta, int i) const;
  // (beta, gamma) from the symmetrized Cartan data.
  long inner(const std::vector<int>& beta, const std::vector<int>& gamma) const;
  // Half squared length (beta, beta)/2.
  long half_norm(const std::vector<int>& beta) const { return inner(beta, beta) / 2; }

 private:
  DynkinData data_;
  std::vector<std::vector<int>> positives_;  // sorted by (height, lex)
  std::vector<int> heights_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace liepres
