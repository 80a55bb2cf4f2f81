#include "liepres/root_system.hpp"

#include <algorithm>
#include <numeric>

#include "liepres/errors.hpp"

namespace liepres {

namespace {

// Builds Cartan data from an edge list with per-node half-norms:
// a_ij = -(max(d_i, d_j)) / d_i on edges.
DynkinData from_edges(const std::string& key, int rank, const std::vector<std::pair<int, int>>& edges,
                      std::vector<int> dvec) {
  DynkinData d;
  d.key = key;
  d.rank = rank;
  d.dvec = std::move(dvec);
  d.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) d.cartan[i][i] = 2;
  for (auto [u, v] : edges) {
    int m = std::max(d.dvec[u], d.dvec[v]);
    d.cartan[u][v] = -m / d.dvec[u];
    d.cartan[v][u] = -m / d.dvec[v];
  }
  return d;
}

std::vector<std::pair<int, int>> chain_edges(int rank) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < rank; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

DynkinData dynkin_for(const std::string& key) {
  if (key.size() == 2 && key[0] == 'a' && key[1] >= '2' && key[1] <= '8') {
    int r = key[1] - '0';
    return from_edges(key, r, chain_edges(r), std::vector<int>(r, 1));
  }
  if (key == "b3") {
    // Node 3 short (b-series: last node short), nodes 1,2 long.
    return from_edges(key, 3, chain_edges(3), {2, 2, 1});
  }
  if (key == "c3") {
    // Node 3 long (c-series: last node long), nodes 1,2 short.
    return from_edges(key, 3, chain_edges(3), {1, 1, 2});
  }
  if (key == "d4") {
    // Chain 1-2 with 3 and 4 both attached to node 2.
    return from_edges(key, 4, {{0, 1}, {1, 2}, {1, 3}}, {1, 1, 1, 1});
  }
  if (key == "g2") {
    // Node 1 short, node 2 long: a_12 = -3, a_21 = -1.
    return from_edges(key, 2, chain_edges(2), {1, 3});
  }
  if (key == "f4") {
    // Chain with nodes 1, 2 short and 3, 4 long.
    return from_edges(key, 4, chain_edges(4), {1, 1, 2, 2});
  }
  if (key == "e6") {
    auto e = chain_edges(5);
    e.emplace_back(2, 5);  // node 6 on node 3
    return from_edges(key, 6, e, std::vector<int>(6, 1));
  }
  if (key == "e7") {
    auto e = chain_edges(6);
    e.emplace_back(3, 6);  // node 7 on node 4
    return from_edges(key, 7, e, std::vector<int>(7, 1));
  }
  if (key == "e8") {
    auto e = chain_edges(7);
    e.emplace_back(4, 7);  // node 8 on node 5
    return from_edges(key, 8, e, std::vector<int>(8, 1));
  }
  throw UnknownType("dynkin_for: unknown type '" + key + "'");
}

RootSystem::RootSystem(DynkinData data) : data_(std::move(data)) {
  const int r = data_.rank;
  // Seed with the simple roots, then close upward: beta + alpha_i is a root
  // iff p - <beta, alpha_i^vee> > 0, where p is the depth of the alpha_i
  // string below beta.  Processing by height keeps the lookups complete.
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> alpha(r, 0);
    alpha[i] = 1;
    frontier.push_back(std::move(alpha));
  }
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  for (auto& alpha : frontier) {
    seen.emplace(alpha, 1);
    all.push_back(alpha);
  }
  size_t head = 0;
  while (head < all.size()) {
    std::vector<int> beta = all[head++];
    for (int i = 0; i < r; ++i) {
      // Depth p of the string beta, beta - alpha_i, ...
      int p = 0;
      std::vector<int> down = beta;
      for (;;) {
        down[i] -= 1;
        bool nonneg = std::all_of(down.begin(), down.end(), [](int c) { return c >= 0; });
        if (!nonneg || !seen.count(down)) break;
        ++p;
      }
      long pair = pairing_with_simple_coroot(beta, i);
      if (p - pair > 0) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (seen.emplace(up, 1).second) all.push_back(up);
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  positives_ = std::move(all);
  heights_.reserve(positives_.size());
  for (size_t k = 0; k < positives_.size(); ++k) {
    heights_.push_back(std::accumulate(positives_[k].begin(), positives_[k].end(), 0));
    index_.emplace(positives_[k], static_cast<int>(k));
  }
}

int RootSystem::index_of(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

long RootSystem::pairing_with_simple_coroot(const std::vector<int>& beta, int i) const {
  long s = 0;
  for (int j = 0; j < data_.rank; ++j) s += static_cast<long>(beta[j]) * data_.cartan[i][j];
  return s;
}

long RootSystem::inner(const std::vector<int>& beta, const std::vector<int>& gamma) const {
  // (alpha_i, alpha_j) = d_i * a_ij.
  long s = 0;
  for (int i = 0; i < data_.rank; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < data_.rank; ++j) {
      if (gamma[j] == 0) continue;
      s += static_cast<long>(beta[i]) * gamma[j] * data_.dvec[i] * data_.cartan[i][j];
    }
  }
  return s;
}

}  // namespace liepres
