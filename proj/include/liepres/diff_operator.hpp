#pragma once

#include <map>
#include <string>

#include "liepres/multipoly.hpp"

namespace liepres {

// Polynomial-coefficient differential operator in one variable u, kept in
// normal order: sum_k g_k(u, lambda, t) D^k with D = d/du.  The map holds
// order -> coefficient, zero coefficients never stored.
class DiffOperator {
 public:
  using TermMap = std::map<int, MultiPoly>;

  // Orders past this cap abort composition rather than silently ballooning.
  static constexpr int kOrderCap = 24;

  DiffOperator() = default;

  static DiffOperator zero() { return DiffOperator(); }
  // g(u,...) * D^k.
  static DiffOperator term(const MultiPoly& coeff, int order);
  static DiffOperator multiplication_by(const MultiPoly& poly) { return term(poly, 0); }

  bool is_zero() const { return terms_.empty(); }
  int order() const;  // highest D power; -1 for zero
  const TermMap& terms() const { return terms_; }
  MultiPoly coefficient(int order) const;

  DiffOperator operator-() const;
  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  // Multiplies every coefficient; meant for central scalars (t, lambda,
  // rationals), not for u-dependent factors (compose with a
  // multiplication operator for that).
  DiffOperator scaled(const MultiPoly& c) const;

  // Operator composition (this after o as maps, i.e. this ∘ o), normal
  // ordered via D^a g = sum_j C(a,j) g^(j) D^(a-j).
  static DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
  static DiffOperator bracket(const DiffOperator& a, const DiffOperator& b);

  // Applies the operator to a polynomial in u.
  MultiPoly apply(const MultiPoly& f) const;

  bool operator==(const DiffOperator& o) const { return terms_ == o.terms_; }

  DiffOperator evaluate(Var v, const Rational& value) const;

  std::string to_string() const;  // e.g. "u^2*D - (lambda - 1)*u" with D^k

 private:
  TermMap terms_;
};

}  // namespace liepres
