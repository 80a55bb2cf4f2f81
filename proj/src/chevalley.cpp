#include "liepres/chevalley.hpp"

#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> vec_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool vec_is_zero(const std::vector<int>& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const std::string& type_key, bool verify_jacobi)
    : roots_(dynkin_for(type_key)) {
  const int dim = static_cast<int>(dimension());
  // Eager pair table: O(1) lookups make the construction-time Jacobi sweep
  // over all basis triples affordable even at dimension 248.
  bracket_table_.clear();
  std::vector<QVec> table(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      CoordVec cv = basis_bracket(i, j);
      QVec& row = table[static_cast<size_t>(i) * dim + j];
      QVec& neg = table[static_cast<size_t>(j) * dim + i];
      for (const auto& [k, c] : cv.entries) {
        Rational v = c.as_constant();
        row[k] = v;
        neg[k] = -v;
      }
    }
  }
  if (!verify_jacobi) return;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      for (int k = j + 1; k < dim; ++k) {
        QVec acc;
        auto fold = [&](int a, int b, int c) {
          // [[b_a, b_b], b_c]
          const QVec& ab = table[static_cast<size_t>(a) * dim + b];
          for (const auto& [m, w] : ab) {
            for (const auto& [q2, v] : table[static_cast<size_t>(m) * dim + c]) {
              Rational& slot = acc[q2];
              slot = slot + w * v;
            }
          }
        };
        fold(i, j, k);
        fold(j, k, i);
        fold(k, i, j);
        for (const auto& [m, v] : acc) {
          if (!v.is_zero()) {
            throw JacobiFailure(name() + ": Jacobi fails on (" + basis_name(i) + ", " +
                                basis_name(j) + ", " + basis_name(k) + ") at " + basis_name(m));
          }
        }
      }
    }
  }
}

int ChevalleyAlgebra::signed_index_of(const std::vector<int>& coeffs) const {
  if (vec_is_zero(coeffs)) return 0;
  int idx = roots_.index_of(coeffs);
  if (idx >= 0) return idx + 1;
  std::vector<int> neg(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) neg[i] = -coeffs[i];
  idx = roots_.index_of(neg);
  if (idx >= 0) return -(idx + 1);
  return 0;
}

std::vector<int> ChevalleyAlgebra::coeffs_of_signed(int sr) const {
  if (sr > 0) return roots_.positive(sr - 1);
  std::vector<int> v = roots_.positive(-sr - 1);
  for (int& e : v) e = -e;
  return v;
}

int ChevalleyAlgebra::basis_index(int signed_root) const {
  const int P = static_cast<int>(roots_.positive_count());
  if (signed_root > 0) return rank() + (signed_root - 1);
  return rank() + P + (-signed_root - 1);
}

std::string ChevalleyAlgebra::basis_name(int index) const {
  const int r = rank();
  const int P = static_cast<int>(roots_.positive_count());
  std::ostringstream os;
  if (index < r) {
    os << "H" << (index + 1);
  } else if (index < r + P) {
    os << "E" << (index - r + 1);
  } else {
    os << "F" << (index - r - P + 1);
  }
  return os.str();
}

Rational ChevalleyAlgebra::positive_pair_constant(int a, int b) const {
  if (a == b) throw Error(name() + ": doubled root requested in structure constant");
  if (b < a) return -positive_pair_constant(b, a);
  auto key = std::make_pair(a, b);
  if (auto it = npos_.find(key); it != npos_.end()) return it->second;

  const std::vector<int> gamma = vec_add(roots_.positive(a), roots_.positive(b));
  const int gi = roots_.index_of(gamma);
  if (gi < 0) throw Error(name() + ": structure constant requested for a non-root sum");

  // Extraspecial decomposition of gamma: minimal first summand in root order.
  int xi = -1, eta = -1;
  const int P = static_cast<int>(roots_.positive_count());
  for (int s = 0; s < P; ++s) {
    std::vector<int> diff = vec_sub(gamma, roots_.positive(s));
    bool nonneg = true;
    for (int e : diff) nonneg = nonneg && e >= 0;
    if (!nonneg) continue;
    int idx = roots_.index_of(diff);
    if (idx >= 0) {
      xi = s;
      eta = idx;
      break;
    }
  }
  if (xi < 0) throw Error(name() + ": no decomposition found for a composite root");

  Rational value;
  if (a == xi) {
    // The extraspecial pair itself carries +(p+1), p the depth of the
    // xi-string below eta.
    int p = 0;
    std::vector<int> v = vec_sub(roots_.positive(eta), roots_.positive(xi));
    while (signed_index_of(v) != 0) {
      ++p;
      v = vec_sub(v, roots_.positive(xi));
    }
    value = Rational(p + 1);
  } else {
    const std::vector<int>& al = roots_.positive(a);
    const std::vector<int>& xiv = roots_.positive(xi);
    const std::vector<int>& etv = roots_.positive(eta);
    Rational t2(0), t3(0);
    std::vector<int> v2 = vec_sub(etv, al);
    if (signed_index_of(v2) != 0) {
      t2 = pair_constant(eta + 1, -(a + 1)) * pair_constant(xi + 1, -(b + 1)) /
           Rational(roots_.inner(v2, v2));
    }
    std::vector<int> v3 = vec_sub(xiv, al);
    if (signed_index_of(v3) != 0) {
      t3 = pair_constant(-(a + 1), xi + 1) * pair_constant(eta + 1, -(b + 1)) /
           Rational(roots_.inner(v3, v3));
    }
    value = Rational(roots_.inner(gamma, gamma)) * (t2 + t3) / positive_pair_constant(xi, eta);
  }
  npos_.emplace(key, value);
  return value;
}

Rational ChevalleyAlgebra::pair_constant(int sr1, int sr2) const {
  if (sr1 == 0 || sr2 == 0) throw Error(name() + ": zero is not a root");
  if (sr1 > 0 && sr2 > 0) return positive_pair_constant(sr1 - 1, sr2 - 1);
  if (sr1 < 0 && sr2 < 0) return -positive_pair_constant(-sr1 - 1, -sr2 - 1);
  if (sr1 < 0) return -pair_constant(sr2, sr1);
  // sr1 > 0, sr2 < 0, sum a nonzero root.
  const std::vector<int> va = coeffs_of_signed(sr1);
  const std::vector<int> vb = coeffs_of_signed(sr2);
  const std::vector<int> delta = vec_add(va, vb);
  const int sd = signed_index_of(delta);
  if (sd == 0) throw Error(name() + ": structure constant requested for a non-root sum");
  if (sd > 0) {
    // Cyclic identity on (alpha, beta, -delta).
    Rational ratio(roots_.inner(delta, delta), roots_.inner(va, va));
    return -ratio * pair_constant(-sr2, sd);
  }
  return -pair_constant(-sr1, -sr2);
}

CoordVec ChevalleyAlgebra::basis_bracket(int i, int j) const {
  if (i == j) return {};
  if (i > j) {
    CoordVec r = basis_bracket(j, i);
    return -r;
  }
  const uint64_t key = (static_cast<uint64_t>(i) << 32) | static_cast<uint64_t>(j);
  if (auto it = bracket_table_.find(key); it != bracket_table_.end()) return it->second;

  const int r = rank();
  const int P = static_cast<int>(roots_.positive_count());
  CoordVec out;
  if (j < r) {
    // Two Cartan elements commute.
  } else if (i < r) {
    const int sr = (j < r + P) ? (j - r + 1) : -(j - r - P + 1);
    const long pairing = roots_.pairing_with_simple_coroot(coeffs_of_signed(sr), i);
    out.add(j, MultiPoly::constant(Rational(pairing)));
  } else {
    const int s1 = (i < r + P) ? (i - r + 1) : -(i - r - P + 1);
    const int s2 = (j < r + P) ? (j - r + 1) : -(j - r - P + 1);
    const std::vector<int> sum = vec_add(coeffs_of_signed(s1), coeffs_of_signed(s2));
    if (vec_is_zero(sum)) {
      // [e_alpha, e_{-alpha}] = H_alpha; with i < j the positive root sits first.
      const std::vector<int>& al = roots_.positive(s1 - 1);
      const long dal = roots_.half_norm(al);
      for (int m = 0; m < r; ++m) {
        Rational c(static_cast<long>(al[m]) * roots_.data().dvec[m], dal);
        if (!c.is_zero()) out.add(m, MultiPoly::constant(c));
      }
    } else if (int sv = signed_index_of(sum); sv != 0) {
      out.add(basis_index(sv), MultiPoly::constant(pair_constant(s1, s2)));
    }
  }
  bracket_table_.emplace(key, out);
  return out;
}

Payload ChevalleyAlgebra::bracket_payload(const Payload& a, const Payload& b) const {
  const auto* va = std::get_if<CoordVec>(&a);
  const auto* vb = std::get_if<CoordVec>(&b);
  if (va == nullptr || vb == nullptr) {
    throw BackendMismatch(name() + ": expects coordinate-vector elements");
  }
  CoordVec out;
  for (const auto& [i, ci] : va->entries) {
    for (const auto& [j, cj] : vb->entries) {
      CoordVec piece = basis_bracket(i, j);
      if (piece.entries.empty()) continue;
      out += piece.scaled(ci * cj);
    }
  }
  return out;
}

Payload ChevalleyAlgebra::element_of_coordinate(int index) const {
  if (index < 0 || index >= static_cast<int>(dimension())) {
    throw Error(name() + ": basis index out of range");
  }
  CoordVec cv;
  cv.add(index, MultiPoly::constant(Rational(1)));
  return cv;
}

LieElement ChevalleyAlgebra::cartan_h(int i) const {
  if (i < 1 || i > rank()) throw Error(name() + ": Cartan index out of range");
  return element(element_of_coordinate(i - 1));
}

LieElement ChevalleyAlgebra::simple_plus(int i) const {
  if (i < 1 || i > rank()) throw Error(name() + ": simple root index out of range");
  std::vector<int> unit(static_cast<size_t>(rank()), 0);
  unit[static_cast<size_t>(i - 1)] = 1;
  const int idx = roots_.index_of(unit);
  return element(element_of_coordinate(basis_index(idx + 1)));
}

LieElement ChevalleyAlgebra::simple_minus(int i) const {
  if (i < 1 || i > rank()) throw Error(name() + ": simple root index out of range");
  std::vector<int> unit(static_cast<size_t>(rank()), 0);
  unit[static_cast<size_t>(i - 1)] = 1;
  const int idx = roots_.index_of(unit);
  return element(element_of_coordinate(basis_index(-(idx + 1))));
}

std::shared_ptr<const ChevalleyAlgebra> make_chevalley(const std::string& type_key,
                                                       bool verify_jacobi) {
  static std::map<std::string, std::shared_ptr<const ChevalleyAlgebra>> cache;
  auto it = cache.find(type_key);
  if (it != cache.end()) return it->second;
  auto alg = std::make_shared<ChevalleyAlgebra>(type_key, verify_jacobi);
  cache.emplace(type_key, alg);
  return alg;
}

const std::vector<long>& exceptional_x_coefficients(const std::string& key) {
  static const std::map<std::string, std::vector<long>> data = {
      {"g2", {6, 10}},
      {"f4", {16, 30, 42, 22}},
      {"e6", {16, 30, 42, 30, 16, 22}},
      {"e7", {27, 52, 75, 96, 66, 34, 49}},
      {"e8", {58, 114, 168, 220, 270, 182, 92, 136}},
  };
  auto it = data.find(key);
  if (it == data.end()) throw UnknownType("no distinguished generators for '" + key + "'");
  return it->second;
}

int exceptional_k1(const std::string& key) {
  static const std::map<std::string, int> data = {
      {"g2", 10}, {"f4", 10}, {"e6", 8}, {"e7", 10}, {"e8", 14}};
  auto it = data.find(key);
  if (it == data.end()) throw UnknownType("no distinguished generators for '" + key + "'");
  return it->second;
}

ExceptionalRealization exceptional_generators(const std::string& key,
                                              std::shared_ptr<const ChevalleyAlgebra> algebra,
                                              std::vector<int> epsilon) {
  if (!algebra) algebra = make_chevalley(key);
  const int r = algebra->rank();
  const std::vector<long>& c = exceptional_x_coefficients(key);
  if (epsilon.empty()) epsilon.assign(static_cast<size_t>(r), 1);
  if (static_cast<int>(epsilon.size()) != r) {
    throw SizeMismatch("sign character length does not match the rank");
  }

  // The x coefficients solve A^T c = 2*(1,...,1): x, y, h span a principal sl2.
  const auto& cart = algebra->root_system().data().cartan;
  for (int j = 0; j < r; ++j) {
    long s = 0;
    for (int i = 0; i < r; ++i) s += c[static_cast<size_t>(i)] * cart[i][j];
    if (s != 2) throw Error(key + ": x coefficients are not principal");
  }

  LieElement x = algebra->zero();
  LieElement y = algebra->zero();
  for (int i = 1; i <= r; ++i) {
    x = x + algebra->simple_plus(i).scaled(Rational(c[static_cast<size_t>(i - 1)]));
    y = y + algebra->simple_minus(i);
  }

  auto Y = [&](int i) {
    LieElement e = algebra->simple_minus(i);
    return epsilon[static_cast<size_t>(i - 1)] == 1 ? e : e.scaled(Rational(-1));
  };
  auto br = [](const LieElement& a, const LieElement& b) { return bracket(a, b); };

  const MultiPoly t = MultiPoly::variable(Var::t);
  LieElement core = algebra->zero();
  MultiPoly scale = t;
  if (key == "g2") {
    core = br(br(Y(1), Y(2)), br(Y(1), br(Y(1), Y(2))));
    scale = t * Rational(1, 129600);
  } else if (key == "f4") {
    core = br(br(Y(1), Y(2)), br(Y(3), br(Y(1), Y(2)))).scaled(Rational(2)) +
           br(br(Y(1), Y(2)), br(Y(4), br(Y(2), Y(3)))).scaled(Rational(2)) -
           br(br(Y(3), Y(4)), br(Y(2), br(Y(2), Y(3))));
    scale = t * Rational(1, 907200);
  } else if (key == "e6") {
    core = br(br(Y(1), Y(2)), br(Y(3), Y(4))) - br(br(Y(1), Y(2)), br(Y(3), Y(6))) +
           br(br(Y(2), Y(3)), br(Y(4), Y(5))) + br(br(Y(3), Y(6)), br(Y(4), Y(5)));
    scale = t * Rational(1, 40320);
  } else if (key == "e7") {
    core = br(br(Y(2), Y(3)), br(Y(7), br(Y(4), Y(5)))) +
           br(br(Y(4), Y(7)), br(Y(5), br(Y(3), Y(4)))) +
           br(br(Y(5), Y(6)), br(Y(7), br(Y(3), Y(4)))) +
           br(br(Y(4), Y(5)), br(Y(3), br(Y(1), Y(2)))).scaled(Rational(2)) +
           br(br(Y(5), Y(6)), br(Y(4), br(Y(2), Y(3)))).scaled(Rational(2)) -
           br(br(Y(4), Y(7)), br(Y(3), br(Y(1), Y(2)))).scaled(Rational(3));
    scale = t * Rational(7, 3628800);
  } else if (key == "e8") {
    core = br(br(Y(7), br(Y(5), Y(6))), br(br(Y(3), Y(4)), br(Y(5), Y(8)))) +
           br(br(Y(8), br(Y(4), Y(5))), br(br(Y(3), Y(4)), br(Y(5), Y(6)))) +
           br(br(Y(8), br(Y(5), Y(6))), br(br(Y(1), Y(2)), br(Y(3), Y(4)))) +
           br(br(Y(8), br(Y(5), Y(6))), br(br(Y(2), Y(3)), br(Y(4), Y(5)))) +
           br(br(Y(8), br(Y(5), Y(6))), br(br(Y(4), Y(5)), br(Y(6), Y(7)))) +
           br(br(Y(4), br(Y(2), Y(3))), br(br(Y(5), Y(8)), br(Y(6), Y(7)))).scaled(Rational(2)) -
           br(br(Y(7), br(Y(5), Y(6))), br(br(Y(1), Y(2)), br(Y(3), Y(4)))).scaled(Rational(3));
    scale = t * Rational(1, 6227020800L);
  } else {
    throw UnknownType("no distinguished generators for '" + key + "'");
  }
  LieElement z = core.scaled(scale);

  GeneratorTriple triple(x, y, z, exceptional_k1(key), /*truncating=*/true);
  return ExceptionalRealization{key, algebra, std::move(triple), std::move(epsilon)};
}

ExceptionalRealization exceptional_generators_auto(
    const std::string& key, std::shared_ptr<const ChevalleyAlgebra> algebra) {
  if (!algebra) algebra = make_chevalley(key);
  const int r = algebra->rank();
  try {
    return exceptional_generators(key, algebra);
  } catch (const WeightMismatch& first) {
    // Enumerate sign characters by flip count, then lexicographically.
    for (int flips = 1; flips <= r; ++flips) {
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        if (__builtin_popcount(mask) != flips) continue;
        std::vector<int> eps(static_cast<size_t>(r), 1);
        for (int i = 0; i < r; ++i) {
          if (mask & (1u << i)) eps[static_cast<size_t>(i)] = -1;
        }
        try {
          return exceptional_generators(key, algebra, std::move(eps));
        } catch (const WeightMismatch&) {
        }
      }
    }
    throw first;
  }
}

}  // namespace liepres
