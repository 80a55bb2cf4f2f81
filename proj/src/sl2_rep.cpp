#include "liepres/sl2_rep.hpp"

#include "liepres/errors.hpp"

namespace liepres {

WeightModule module_matrices(const MultiPoly& mu, int truncation) {
  if (truncation < 1) throw Error("module_matrices: truncation must be at least 1");
  const int n = truncation + 1;
  WeightModule m{mu, truncation, SparseMatrix(n), SparseMatrix(n), SparseMatrix(n)};
  const MultiPoly one = MultiPoly::constant(Rational(1));
  for (int i = 0; i <= truncation; ++i) {
    // Row i+1 carries l_{mu-2i}.
    m.h.set(i + 1, i + 1, mu - MultiPoly::constant(Rational(2L * i)));
    if (i < truncation) m.x_minus.set(i + 2, i + 1, one);
    if (i >= 1) {
      // X^+ l_{mu-2i} = i(mu-i+1) l_{mu-2i+2}.
      MultiPoly c = (mu - MultiPoly::constant(Rational(i - 1))) * Rational(i);
      m.x_plus.set(i, i + 1, c);
    }
  }
  return m;
}

SparseMatrix commutator_defect(const WeightModule& m) {
  return SparseMatrix::bracket(m.x_plus, m.x_minus) - m.h;
}

MultiPoly casimir_scalar(const MultiPoly& mu) { return mu * mu + mu * Rational(2); }

SparseMatrix casimir_matrix(const WeightModule& m) {
  SparseMatrix anti = m.x_plus * m.x_minus + m.x_minus * m.x_plus;
  return anti.scaled(MultiPoly::constant(Rational(2))) + m.h * m.h;
}

}  // namespace liepres
