#pragma once

#include "liepres/relation.hpp"

namespace liepres {

// Substitutes t -> t / lambda^p into every explicit coefficient of the
// relation and sends lambda -> infinity.  The bracket words absorb their own
// rescaling: rewriting both sides in terms of the rescaled generators leaves
// the printed coefficients as the only carriers of lambda, so only those are
// touched.  p is 1 for the sl family and 2 for the o/sp family.
//
// After the substitution every term of a scalable relation must sit at one
// common net lambda-degree; that common power is cancelled and the limit is
// taken coefficient-wise, which is then exact (no word is dropped).  Terms at
// distinct degrees would force part of the relation to vanish against the
// rest, so that case throws DivergentLimit instead of silently losing words.
Relation formal_limit_relation(const Relation& rel, int p);

}  // namespace liepres
