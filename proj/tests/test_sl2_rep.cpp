#include "doctest.h"
#include "liepres/errors.hpp"
#include "liepres/sl2_rep.hpp"

using namespace liepres;

namespace {
const MultiPoly kMu = MultiPoly::variable(Var::mu);
MultiPoly C(long v) { return MultiPoly::constant(Rational(v)); }
}  // namespace

TEST_CASE("module matrices at formal highest weight") {
  WeightModule m = module_matrices(kMu, 6);
  CHECK(m.size() == 7);

  // [H, X^+] = 2 X^+ and [H, X^-] = -2 X^- hold exactly, boundary included.
  CHECK(SparseMatrix::bracket(m.h, m.x_plus) == m.x_plus.scaled(C(2)));
  CHECK(SparseMatrix::bracket(m.h, m.x_minus) == m.x_minus.scaled(C(-2)));

  // [X^+, X^-] = H except the single truncation slot.
  SparseMatrix defect = commutator_defect(m);
  MultiPoly boundary = (kMu - C(6)) * Rational(-7);
  CHECK(defect.entry(7, 7) == boundary);
  CHECK(defect - SparseMatrix::unit(7, 7, 7, boundary) == SparseMatrix(7));

  // X^+ l_mu = 0: nothing maps into column 1 from the left of the string.
  CHECK(m.x_plus.entry(1, 1).is_zero());
  // X^+ l_{mu-2} = 1*(mu-1+1) l_mu = mu l_mu.
  CHECK(m.x_plus.entry(1, 2) == kMu);
}

TEST_CASE("integer weight exhibits the irreducible submodule") {
  // mu = n: the X^+ coefficient i(mu-i+1) vanishes at i = n+1, so the tail
  // spans a submodule with highest vector l_{-n-2}.
  WeightModule m = module_matrices(C(3), 6);
  CHECK(m.x_plus.entry(4, 5).is_zero());      // i = 4 = n+1
  CHECK(!m.x_plus.entry(3, 4).is_zero());     // i = 3 still inside L^3
  CHECK(m.x_plus.entry(3, 4) == C(3));        // 3*(3-3+1)

  // Adjoint module check: mu = 2, X^+ l_0 = 2 l_2.
  WeightModule adj = module_matrices(C(2), 5);
  CHECK(adj.x_plus.entry(1, 2) == C(2));
  CHECK(adj.h.entry(2, 2).is_zero());  // l_0 has weight zero
}

TEST_CASE("casimir scalar and matrix") {
  CHECK(casimir_scalar(C(0)).is_zero());
  CHECK(casimir_scalar(C(2)) == C(8));
  MultiPoly lam = MultiPoly::variable(Var::lambda);
  CHECK(casimir_scalar(lam - C(1)) == lam * lam - C(1));

  WeightModule m = module_matrices(kMu, 8);
  SparseMatrix scalar_part = SparseMatrix::identity(9).scaled(casimir_scalar(kMu));
  SparseMatrix diff = casimir_matrix(m) - scalar_part;
  // Only the truncation boundary deviates: Delta v_N loses 2(N+1)(mu-N).
  MultiPoly boundary = (kMu - C(8)) * Rational(-18);
  CHECK(diff == SparseMatrix::unit(9, 9, 9, boundary));

  // On the adjoint module the scalar is 8 at the highest vector.
  WeightModule adj = module_matrices(C(2), 5);
  CHECK(casimir_matrix(adj).entry(1, 1) == C(8));
}

TEST_CASE("truncation guard") {
  CHECK_THROWS_AS(module_matrices(kMu, 0), Error);
}
