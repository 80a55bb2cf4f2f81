#include "liepres/evaluate.hpp"

#include "liepres/errors.hpp"

namespace liepres {

LieElement evaluate_word(const WordPtr& w, const GeneratorTriple& triple, const CoefEnv& env) {
  if (!w) throw Error("evaluate_word: empty word");
  switch (w->kind) {
    case Word::Kind::Gen:
      switch (w->gen) {
        case 'x':
          return triple.x();
        case 'y':
          return triple.y();
        case 'z':
          return triple.z();
        case 'h':
          return triple.h();
      }
      throw Error(std::string("evaluate_word: unknown generator '") + w->gen + "'");
    case Word::Kind::ZIndex:
      return triple.z_i(w->index);
    case Word::Kind::Bracket:
      return bracket(evaluate_word(w->left, triple, env), evaluate_word(w->right, triple, env));
    case Word::Kind::Ad: {
      long e = eval_coef_integer(w->exp, env);
      LieElement base = evaluate_word(w->left, triple, env);
      LieElement acc = evaluate_word(w->right, triple, env);
      for (long i = 0; i < e && !acc.is_zero(); ++i) acc = bracket(base, acc);
      return acc;
    }
  }
  throw Error("evaluate_word: unreachable");
}

LieElement evaluate_side(const std::vector<Term>& side, const GeneratorTriple& triple,
                         const CoefEnv& env) {
  // Zero of the backend's own payload kind, so mixed-kind addition never
  // comes up (the algebra-level zero() is deliberately kind-agnostic).
  LieElement acc = triple.x().scaled(MultiPoly::zero());
  for (const Term& term : side) {
    MultiPoly c = eval_coef(term.coeff, env);
    if (term.negative) c = -c;
    acc = acc + evaluate_word(term.word, triple, env).scaled(c);
  }
  return acc;
}

LieElement evaluate_relation(const Relation& rel, const GeneratorTriple& triple,
                             const CoefEnv& env) {
  return evaluate_side(rel.lhs, triple, env) - evaluate_side(rel.rhs, triple, env);
}

}  // namespace liepres
