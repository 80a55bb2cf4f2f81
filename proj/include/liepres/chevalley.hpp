#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liepres/lie.hpp"
#include "liepres/root_system.hpp"

namespace liepres {

// Integral-basis backend for a semisimple type: basis {H_1..H_r} followed by
// root vectors e_alpha for the positive then the negative roots.  Structure
// constants N_{alpha,beta} = +-(p+1) are fixed by choosing +(p+1) on the
// extraspecial pair of every non-simple positive root (minimal first
// component in the (height, lex) root order) and propagating through the
// standard identities.  Construction optionally checks the Jacobi identity
// over every basis triple and throws JacobiFailure on any violation.
class ChevalleyAlgebra : public LieAlgebra {
 public:
  explicit ChevalleyAlgebra(const std::string& type_key, bool verify_jacobi = true);

  std::string name() const override { return roots_.data().key; }
  Payload bracket_payload(const Payload& a, const Payload& b) const override;
  Payload element_of_coordinate(int index) const override;

  int rank() const { return roots_.rank(); }
  size_t dimension() const { return roots_.dimension(); }
  const RootSystem& root_system() const { return roots_; }

  // Generators, 1-based to match the printed tables.
  LieElement cartan_h(int i) const;
  LieElement simple_plus(int i) const;
  LieElement simple_minus(int i) const;

  // Signed root index: +(a+1) for positive root #a, -(a+1) for its negative.
  int signed_index_of(const std::vector<int>& coeffs) const;  // 0 when not a root
  // N_{alpha,beta} for signed root indices whose sum is a root.
  Rational pair_constant(int sr1, int sr2) const;

  // Basis bookkeeping (coordinates 0..dim-1: Cartans, positives, negatives).
  int basis_index(int signed_root) const;
  std::string basis_name(int index) const;

 private:
  CoordVec basis_bracket(int i, int j) const;  // memoized
  Rational positive_pair_constant(int a, int b) const;
  std::vector<int> coeffs_of_signed(int sr) const;

  RootSystem roots_;
  mutable std::map<std::pair<int, int>, Rational> npos_;
  mutable std::map<uint64_t, CoordVec> bracket_table_;
};

std::shared_ptr<const ChevalleyAlgebra> make_chevalley(const std::string& type_key,
                                                       bool verify_jacobi = true);

struct ExceptionalRealization {
  std::string key;
  std::shared_ptr<const ChevalleyAlgebra> algebra;
  GeneratorTriple triple;
  std::vector<int> epsilon;  // sign character on the simple root vectors
};

// Distinguished x, y, z for g2/f4/e6/e7/e8.  x = sum c_i X_i^+ with the
// principal coefficients (A^T c = 2*(1,..,1)), y = sum X_i^-, z the scaled
// nested bracket in the X_i^-.  epsilon (entries +-1, default all +1)
// rescales X_i^- -> epsilon_i X_i^- inside z; the algebra instance may be
// shared across retries.
ExceptionalRealization exceptional_generators(
    const std::string& key, std::shared_ptr<const ChevalleyAlgebra> algebra = nullptr,
    std::vector<int> epsilon = {});

// As above, but when the default character fails the lowest-weight-vector
// checks, scan the 2^rank sign characters by ascending flip count and adopt
// the first that constructs.  Rethrows the default-character failure when
// none does.
ExceptionalRealization exceptional_generators_auto(
    const std::string& key, std::shared_ptr<const ChevalleyAlgebra> algebra = nullptr);

// The principal sl2 coefficients of x, as printed in the generator tables.
const std::vector<long>& exceptional_x_coefficients(const std::string& key);
int exceptional_k1(const std::string& key);

}  // namespace liepres
