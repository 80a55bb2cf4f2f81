#pragma once

#include "liepres/lie.hpp"
#include "liepres/relation.hpp"

namespace liepres {

// Bracket-word -> backend element.  Gen letters map to the triple's
// generators (h = [x,y]), z_i to the cached ad-power tower, brackets and
// ad-powers to backend brackets.  Symbolic ad exponents need env.n bound.
LieElement evaluate_word(const WordPtr& w, const GeneratorTriple& triple, const CoefEnv& env);

// Sum of coefficient-scaled words; the empty side is the backend zero.
LieElement evaluate_side(const std::vector<Term>& side, const GeneratorTriple& triple,
                         const CoefEnv& env);

// LHS - RHS.  The relation holds in the backend iff the result is_zero().
LieElement evaluate_relation(const Relation& rel, const GeneratorTriple& triple,
                             const CoefEnv& env);

}  // namespace liepres
