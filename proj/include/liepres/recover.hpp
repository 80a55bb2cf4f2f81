#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepres/evaluate.hpp"

namespace liepres {

// Exact symbolic coordinates of a payload: (structural slot, spatial
// monomial) -> scalar polynomial.  The structural slot is the payload's own
// indexing (matrix entry, basis index, D-order); the spatial monomial is the
// u/q/p part of polynomial-valued components; the scalar keeps t and lambda.
using PolyCoords = std::map<std::pair<uint64_t, uint64_t>, MultiPoly>;
PolyCoords poly_coordinates(const Payload& payload);

// Result of solving  LHS = sum_i c_i * word_i  over the claimed
// right-hand-side words, with the c_i unknown polynomials in t (and lambda
// where the backend carries it).
struct Recovery {
  enum class Kind { Unique, Parameterized, Infeasible };

  Kind kind = Kind::Infeasible;
  // One solved coefficient per right-hand-side term, for the bare word (the
  // written sign and coefficient play no part in the solve).
  std::vector<MultiPoly> coefficients;
  size_t freedom = 0;  // kernel dimension when Parameterized

  // "c([z,z2]) = 338422*t" style, one clause per right-hand-side term.
  std::string describe(const Relation& rel) const;
};

Recovery recover_coefficients(const Relation& rel, const GeneratorTriple& triple,
                              const CoefEnv& env);

}  // namespace liepres
