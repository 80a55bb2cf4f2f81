#include "liepres/limits.hpp"

#include <map>
#include <utility>
#include <vector>

#include "liepres/errors.hpp"

namespace liepres {
namespace {

struct WordLess {
  bool operator()(const WordPtr& a, const WordPtr& b) const {
    return word_compare(a, b) < 0;
  }
};

// Per-side accumulation of normalized words with Laurent coefficients.
using LaurentSide = std::map<WordPtr, LaurentInLambda, WordLess>;

LaurentSide scale_side(const std::vector<Term>& side, int p) {
  CoefEnv env;  // lambda-family relations never mention n
  LaurentSide acc;
  for (const Term& term : side) {
    NormalizedWord nw = normalize_word(expand_ad(term.word, env));
    if (nw.vanishes) continue;
    MultiPoly c =
        term.coeff ? eval_coef(term.coeff, env) : MultiPoly::constant(Rational(1));
    if (term.negative != (nw.sign < 0)) c = -c;
    LaurentInLambda scaled = LaurentInLambda::scale_t(c, p);
    auto [it, inserted] = acc.emplace(nw.word, scaled);
    if (!inserted) {
      it->second = it->second + scaled;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
  return acc;
}

// Rebuilds a printable coefficient tree for one monomial with a positive
// rational in front; the caller has already peeled the sign off.
CoefPtr coef_from_monomial(const Rational& c, const Monomial& m) {
  CoefPtr expr;
  if (c != Rational(1) || m.is_constant()) expr = CoefExpr::num(c);
  for (Var v : {Var::t, Var::lambda}) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    CoefPtr factor = CoefExpr::symbol(v == Var::t ? CoefSym::t : CoefSym::lambda);
    if (e > 1)
      factor = CoefExpr::node(CoefExpr::Kind::Pow, factor,
                              CoefExpr::num(Rational(static_cast<long>(e))));
    expr = expr ? CoefExpr::node(CoefExpr::Kind::Mul, expr, factor) : factor;
  }
  return expr;
}

Term make_term(const MultiPoly& coeff, const WordPtr& word) {
  Term out;
  out.word = word;
  if (coeff.term_count() == 1) {
    const auto& [key, c] = *coeff.terms().begin();
    out.negative = c < Rational(0);
    Rational mag = out.negative ? -c : c;
    Monomial mono{key};
    if (mag != Rational(1) || !mono.is_constant())
      out.coeff = coef_from_monomial(mag, mono);
    return out;
  }
  CoefPtr expr;
  for (const auto& [key, c] : coeff.terms()) {
    bool neg = c < Rational(0);
    CoefPtr piece = coef_from_monomial(neg ? -c : c, Monomial{key});
    if (!expr)
      expr = neg ? CoefExpr::node(CoefExpr::Kind::Neg, piece, nullptr) : piece;
    else
      expr = CoefExpr::node(neg ? CoefExpr::Kind::Sub : CoefExpr::Kind::Add,
                            expr, piece);
  }
  out.coeff = expr;
  return out;
}

}  // namespace

Relation formal_limit_relation(const Relation& rel, int p) {
  if (p != 1 && p != 2)
    throw DivergentLimit("scaling power must be 1 (sl) or 2 (o/sp)");

  LaurentSide lhs = scale_side(rel.lhs, p);
  LaurentSide rhs = scale_side(rel.rhs, p);

  bool seen = false;
  int top = 0;
  for (const LaurentSide* side : {&lhs, &rhs}) {
    for (const auto& [word, c] : *side) {
      int d = c.top_net_degree();
      if (!seen) {
        top = d;
        seen = true;
      } else if (d != top) {
        throw DivergentLimit(
            "terms scale with different powers of lambda; the relation is not "
            "homogeneous under t -> t/lambda^" +
            std::to_string(p));
      }
    }
  }

  auto rebuild = [&](const LaurentSide& side) {
    std::vector<Term> out;
    for (const auto& [word, c] : side) {
      // Multiply by lambda^{-top} so the surviving part sits at degree zero.
      int dp = c.denpow() + top;
      LaurentInLambda shifted =
          dp >= 0 ? LaurentInLambda(c.num(), dp)
                  : LaurentInLambda(
                        c.num() * MultiPoly::variable(Var::lambda,
                                                      static_cast<unsigned>(-dp)),
                        0);
      MultiPoly lim = shifted.limit_at_infinity();
      if (!lim.is_zero()) out.push_back(make_term(lim, word));
    }
    return out;
  };

  Relation out;
  out.lhs = rebuild(lhs);
  out.rhs = rebuild(rhs);
  return out;
}

}  // namespace liepres
