#pragma once

#include "liepres/multipoly.hpp"
#include "liepres/sparse_matrix.hpp"

namespace liepres {

// Truncated weight module with highest weight mu (a rational constant or the
// formal mu/lambda-1): basis l_{mu-2i} for i = 0..truncation, stored as rows
// 1..truncation+1 of (truncation+1)-square matrices acting by
//   H l_{mu-2i} = (mu-2i) l_{mu-2i},
//   X^- l_w = l_{w-2}              (dropped off the truncation edge),
//   X^+ l_{mu-2i} = i(mu-i+1) l_{mu-2i+2},  X^+ l_mu = 0.
// The commutation [X^+, X^-] = H holds everywhere except the boundary slot.
struct WeightModule {
  MultiPoly mu;
  int truncation = 0;
  SparseMatrix x_plus, x_minus, h;
  int size() const { return truncation + 1; }
};

WeightModule module_matrices(const MultiPoly& mu, int truncation = 12);

// [X^+, X^-] - H: zero except entry (N+1, N+1) = -(N+1)(mu-N), N = truncation.
SparseMatrix commutator_defect(const WeightModule& m);

// mu^2 + 2*mu, the scalar by which the Casimir acts on a highest-weight-mu
// module.
MultiPoly casimir_scalar(const MultiPoly& mu);

// 2(X^+X^- + X^-X^+) + H^2 on the truncated module; equals
// casimir_scalar(mu) * identity away from the truncation boundary.
SparseMatrix casimir_matrix(const WeightModule& m);

}  // namespace liepres
