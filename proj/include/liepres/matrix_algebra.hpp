#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liepres/lie.hpp"
#include "liepres/sparse_matrix.hpp"

namespace liepres {

// Backend whose elements are square sparse matrices under the commutator.
class MatrixLieAlgebra : public LieAlgebra {
 public:
  MatrixLieAlgebra(std::string name, int n) : name_(std::move(name)), n_(n) {}

  std::string name() const override { return name_; }
  int matrix_size() const { return n_; }

  Payload bracket_payload(const Payload& a, const Payload& b) const override {
    return SparseMatrix::bracket(std::get<SparseMatrix>(a), std::get<SparseMatrix>(b));
  }

  Payload element_of_coordinate(int index) const override {
    int i = index / n_ + 1, j = index % n_ + 1;
    return SparseMatrix::unit(n_, i, j);
  }

  LieElement matrix(const SparseMatrix& m) const { return element(Payload(m)); }

 private:
  std::string name_;
  int n_;
};

enum class ClassicalFamily { sl, o_odd, sp, o_even };

const char* family_key(ClassicalFamily f);
ClassicalFamily family_from_key(const std::string& key);  // throws UnknownType

// Expected dimension of the family member at parameter n.
int classical_dimension(ClassicalFamily f, int n);
// The z-weight: [h, z] = -k1 z.
int classical_k1(ClassicalFamily f, int n);
// Smallest admissible family parameter.
int classical_min_rank(ClassicalFamily f);

struct ClassicalRealization {
  ClassicalFamily family;
  int n;  // family parameter (sl(n) acts on n, the others on 2n or 2n+1)
  std::shared_ptr<const MatrixLieAlgebra> algebra;
  GeneratorTriple triple;       // t left formal in z
  SparseMatrix invariant_form;  // zero matrix for sl (no form to preserve)
};

// Builds the distinguished generators of the family member; throws
// RankTooSmall below the family's domain.  The z generator carries the
// formal parameter t.
ClassicalRealization classical_generators(ClassicalFamily f, int n);

// The bilinear form each family member is frozen to preserve (pattern
// recovered once by solving X^T G + G X = 0 over the generators, then
// pinned here; see recover_invariant_form).
SparseMatrix frozen_invariant_form(ClassicalFamily f, int n);

// Solves X^T G + G X = 0 for G over the given matrices; throws Error unless
// the solution space is exactly one-dimensional.  Normalized so the first
// nonzero entry in row-major order is 1.
SparseMatrix recover_invariant_form(const std::vector<SparseMatrix>& generators);
// Same, over the distinguished generators of a family member.
SparseMatrix recover_invariant_form_for(ClassicalFamily f, int n);

// True iff every element satisfies X^T G + G X = 0.
bool form_invariance_check(const std::vector<SparseMatrix>& elements, const SparseMatrix& form,
                           std::string* first_failure = nullptr);

}  // namespace liepres
