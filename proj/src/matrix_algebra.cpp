#include "liepres/matrix_algebra.hpp"

#include "liepres/errors.hpp"
#include "liepres/linalg.hpp"

namespace liepres {

namespace {

MultiPoly C(long v) { return MultiPoly::constant(Rational(v)); }

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

const char* family_key(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::sl: return "sl";
    case ClassicalFamily::o_odd: return "o_odd";
    case ClassicalFamily::sp: return "sp";
    case ClassicalFamily::o_even: return "o_even";
  }
  return "?";
}

ClassicalFamily family_from_key(const std::string& key) {
  if (key == "sl") return ClassicalFamily::sl;
  if (key == "o_odd") return ClassicalFamily::o_odd;
  if (key == "sp") return ClassicalFamily::sp;
  if (key == "o_even") return ClassicalFamily::o_even;
  throw UnknownType("unknown classical family '" + key + "'");
}

int classical_dimension(ClassicalFamily f, int n) {
  switch (f) {
    case ClassicalFamily::sl: return n * n - 1;
    case ClassicalFamily::o_odd: return n * (2 * n + 1);
    case ClassicalFamily::sp: return n * (2 * n + 1);
    case ClassicalFamily::o_even: return n * (2 * n - 1);
  }
  return 0;
}

int classical_k1(ClassicalFamily f, int n) {
  switch (f) {
    case ClassicalFamily::sl: return 4;
    case ClassicalFamily::o_odd: return 6;
    case ClassicalFamily::sp: return 6;
    case ClassicalFamily::o_even: return 2 * n - 2;
  }
  return 0;
}

int classical_min_rank(ClassicalFamily f) {
  return f == ClassicalFamily::o_even ? 4 : 3;
}

namespace {

// Fills x, y, z with the family's distinguished generators; returns the
// matrix size.
int build_generator_matrices(ClassicalFamily f, int n, SparseMatrix* px, SparseMatrix* py,
                             SparseMatrix* pz) {
  if (n < classical_min_rank(f)) {
    throw RankTooSmall(std::string(family_key(f)) + " requires n >= " +
                       std::to_string(classical_min_rank(f)) + ", got " + std::to_string(n));
  }

  int N = 0;  // matrix size
  switch (f) {
    case ClassicalFamily::sl: N = n; break;
    case ClassicalFamily::o_odd: N = 2 * n + 1; break;
    case ClassicalFamily::sp:
    case ClassicalFamily::o_even: N = 2 * n; break;
  }

  SparseMatrix x(N), y(N), z(N);
  const MultiPoly t = MultiPoly::variable(Var::t);

  switch (f) {
    case ClassicalFamily::sl: {
      for (int i = 1; i <= n - 1; ++i) {
        x.add(i, i + 1, C(static_cast<long>(i) * (n - i)));
        y.add(i + 1, i, C(1));
      }
      for (int i = 1; i <= n - 2; ++i) z.add(i + 2, i, t);
      break;
    }
    case ClassicalFamily::o_odd: {
      long c = static_cast<long>(n) * (n + 1);
      x.add(n + 1, 2 * n + 1, C(c));
      x.add(n, n + 1, C(-c));
      y.add(2 * n + 1, n + 1, C(1));
      y.add(n + 1, n, C(-1));
      for (int i = 1; i <= n - 1; ++i) {
        long ci = static_cast<long>(i) * (2 * n + 1 - i);
        x.add(i, i + 1, C(ci));
        x.add(n + i + 2, n + i + 1, C(-ci));
        y.add(i + 1, i, C(1));
        y.add(n + i + 1, n + i + 2, C(-1));
      }
      z.add(2 * n - 1, n + 1, t);
      z.add(n + 1, n - 2, -t);
      z.add(2 * n + 1, n - 1, -t);
      z.add(2 * n, n, t);
      for (int i = 1; i <= n - 3; ++i) {
        z.add(i + 3, i, t);
        z.add(n + i + 1, n + i + 4, -t);
      }
      break;
    }
    case ClassicalFamily::sp: {
      x.add(n, 2 * n, C(static_cast<long>(n) * n));
      y.add(2 * n, n, C(1));
      for (int i = 1; i <= n - 1; ++i) {
        long ci = static_cast<long>(i) * (2 * n - i);
        x.add(i, i + 1, C(ci));
        x.add(n + i + 1, n + i, C(-ci));
        y.add(i + 1, i, C(1));
        y.add(n + i, n + i + 1, C(-1));
      }
      z.add(2 * n, n - 2, t);
      z.add(2 * n - 2, n, t);
      z.add(2 * n - 1, n - 1, -t);
      for (int i = 1; i <= n - 3; ++i) {
        z.add(i + 3, i, t);
        z.add(n + i, n + i + 3, -t);
      }
      break;
    }
    case ClassicalFamily::o_even: {
      long c = static_cast<long>(n) * (n - 1) / 2;
      x.add(n - 1, n, C(c));
      x.add(2 * n, 2 * n - 1, C(-c));
      x.add(n - 1, 2 * n, C(c));
      x.add(n, 2 * n - 1, C(-c));
      for (int i = 1; i <= n - 2; ++i) {
        long ci = static_cast<long>(i) * (2 * n - 1 - i);
        x.add(i, i + 1, C(ci));
        x.add(n + i + 1, n + i, C(-ci));
      }
      y.add(2 * n, n - 1, C(1));
      y.add(2 * n - 1, n, C(-1));
      for (int i = 1; i <= n - 1; ++i) {
        y.add(i + 1, i, C(1));
        y.add(n + i, n + i + 1, C(-1));
      }
      MultiPoly s = t * MultiPoly::constant(Rational(1, factorial(2 * n - 2)));
      z.add(n, 1, s);
      z.add(n + 1, 2 * n, -s);
      z.add(n + 1, n, s);
      z.add(2 * n, 1, -s);
      break;
    }
  }

  *px = std::move(x);
  *py = std::move(y);
  *pz = std::move(z);
  return N;
}

}  // namespace

ClassicalRealization classical_generators(ClassicalFamily f, int n) {
  SparseMatrix x, y, z;
  int N = build_generator_matrices(f, n, &x, &y, &z);

  auto algebra = std::make_shared<MatrixLieAlgebra>(
      std::string(family_key(f)) + "(" + std::to_string(N) + ")", N);
  GeneratorTriple triple(algebra->matrix(x), algebra->matrix(y), algebra->matrix(z),
                         classical_k1(f, n), /*truncating=*/true);

  SparseMatrix form(0);
  if (f != ClassicalFamily::sl) form = frozen_invariant_form(f, n);

  return ClassicalRealization{f, n, algebra, std::move(triple), std::move(form)};
}

SparseMatrix frozen_invariant_form(ClassicalFamily f, int n) {
  // Patterns pinned from recover_invariant_form over the generators
  // (unit tests re-derive and compare).
  switch (f) {
    case ClassicalFamily::sl:
      throw Error("frozen_invariant_form: sl preserves no bilinear form");
    case ClassicalFamily::o_odd: {
      SparseMatrix G(2 * n + 1);
      G.set(n + 1, n + 1, MultiPoly::constant(1));
      for (int i = 1; i <= n; ++i) {
        G.set(i, n + 1 + i, MultiPoly::constant(1));
        G.set(n + 1 + i, i, MultiPoly::constant(1));
      }
      return G;
    }
    case ClassicalFamily::sp: {
      SparseMatrix G(2 * n);
      for (int i = 1; i <= n; ++i) {
        G.set(i, n + i, MultiPoly::constant(1));
        G.set(n + i, i, MultiPoly::constant(-1));
      }
      return G;
    }
    case ClassicalFamily::o_even: {
      SparseMatrix G(2 * n);
      for (int i = 1; i <= n; ++i) {
        G.set(i, n + i, MultiPoly::constant(1));
        G.set(n + i, i, MultiPoly::constant(1));
      }
      return G;
    }
  }
  throw UnknownType("frozen_invariant_form: bad family");
}

// Exposed for tests that re-derive the frozen patterns.
SparseMatrix recover_invariant_form_for(ClassicalFamily f, int n) {
  SparseMatrix x, y, z;
  build_generator_matrices(f, n, &x, &y, &z);
  return recover_invariant_form({x, y, z});
}

SparseMatrix recover_invariant_form(const std::vector<SparseMatrix>& generators) {
  if (generators.empty()) throw Error("recover_invariant_form: no generators");
  int N = generators.front().size();
  size_t nn = static_cast<size_t>(N) * N;
  // Unknowns: G row-major; per generator X one equation block X^T G + G X = 0,
  // i.e. for every (i,j): sum_k X_ki G_kj + sum_k G_ik X_kj = 0.
  QDense A(generators.size() * nn, nn);
  for (size_t g = 0; g < generators.size(); ++g) {
    const SparseMatrix& X = generators[g];
    if (X.size() != N) throw SizeMismatch("recover_invariant_form: mixed matrix sizes");
    SparseMatrix Xe = X.evaluate(Var::t, Rational(1));
    auto eq = [&](int i, int j) { return g * nn + static_cast<size_t>(i - 1) * N + (j - 1); };
    auto un = [&](int a, int b) { return static_cast<size_t>(a - 1) * N + (b - 1); };
    for (const auto& [key, val] : Xe.entries()) {
      int k = static_cast<int>(key >> 32);
      int l = static_cast<int>(key & 0xffffffffu);
      Rational v = val.as_constant();
      // X_kl enters equation (l, j) via X^T G with unknown G_kj,
      // and equation (i, l) via G X with unknown G_ik.
      for (int j = 1; j <= N; ++j) A.at(eq(l, j), un(k, j)) += v;
      for (int i = 1; i <= N; ++i) A.at(eq(i, l), un(i, k)) += v;
    }
  }
  auto basis = A.nullspace();
  if (basis.size() != 1) {
    throw Error("recover_invariant_form: solution space has dimension " +
                std::to_string(basis.size()));
  }
  // Normalize: first nonzero coordinate 1.
  Rational lead(0);
  for (const Rational& v : basis[0]) {
    if (!v.is_zero()) {
      lead = v;
      break;
    }
  }
  SparseMatrix G(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      Rational v = basis[0][static_cast<size_t>(i - 1) * N + (j - 1)] / lead;
      if (!v.is_zero()) G.set(i, j, MultiPoly::constant(v));
    }
  }
  return G;
}

bool form_invariance_check(const std::vector<SparseMatrix>& elements, const SparseMatrix& form,
                           std::string* first_failure) {
  for (size_t idx = 0; idx < elements.size(); ++idx) {
    const SparseMatrix& X = elements[idx];
    SparseMatrix lhs = X.transpose() * form + form * X;
    if (!lhs.is_zero()) {
      if (first_failure) {
        *first_failure = "element #" + std::to_string(idx) +
                         " breaks the form: X^T G + G X = " + lhs.to_string();
      }
      return false;
    }
  }
  return true;
}

}  // namespace liepres
