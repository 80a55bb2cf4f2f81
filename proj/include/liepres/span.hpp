#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liepres/lie.hpp"

namespace liepres {

struct SpanResult {
  std::vector<LieElement> basis;  // elements backing the echelon rows
  QEchelon echelon;
  Rational t_value;
  size_t dim() const { return basis.size(); }
};

// Closure of span(seeds) under bracketing with the seeds, i.e. the Lie
// subalgebra the seeds generate (left-normed words span it).  Coordinates
// are taken with t specialized to t_value; the default 1 keeps the formal
// parameter out of rank decisions.
SpanResult span_closure(const std::vector<LieElement>& seeds,
                        const Rational& t_value = Rational(1));

// Plain span of the given elements, no bracket closure.  For slicing
// infinite-dimensional backends along a bracket-stable subspace (graded
// pieces, order filtrations) where closure would not terminate.
SpanResult span_of(const std::vector<LieElement>& elements,
                   const Rational& t_value = Rational(1));

// Rebuilds an element from coordinate space.
LieElement element_from_coordinates(const std::shared_ptr<const LieAlgebra>& algebra,
                                    const QVec& coords);

// One isotypic piece: the (k+1)-dimensional module appearing `multiplicity`
// times.
struct Summand {
  int k;
  int multiplicity;
};

struct DecompositionReport {
  std::vector<Summand> summands;  // ascending k
  size_t total_dim = 0;
  // Sorted weight multiset {k, k, ...} with repeats, e.g. "2, 6, 6, 10".
  std::string spectrum_string() const;
  std::string to_string() const;  // "L^2 + 2 L^6 + L^10 (dim 28)"
};

// Splits the spanned subalgebra into irreducible modules for the sl2 of the
// triple, by h-weight spaces and kernels of ad x.  Requires ad h to act
// diagonally on the backend's coordinate directions (verified; throws
// NotDiagonalizable otherwise, or when the weight-space dimensions fail to
// add up).
DecompositionReport decompose_adjoint(const GeneratorTriple& triple, const SpanResult& span);

}  // namespace liepres
