#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "liepres/rational.hpp"

namespace liepres {

// The indeterminates the whole library computes with.  Fixing the universe
// lets a monomial live in one machine word and makes term order a plain
// integer comparison.
enum class Var : int { t = 0, lambda = 1, mu = 2, u = 3, q = 4, p = 5 };

inline constexpr int kNumVars = 6;
inline constexpr unsigned kMaxExponent = 1023;  // 10 bits per variable

const char* var_name(Var v);

// Exponent vector packed into a uint64: t occupies the highest bits, p the
// lowest, so descending numeric order on keys is descending lexicographic
// order with precedence t > lambda > mu > u > q > p.
class Monomial {
 public:
  Monomial() : key_(0) {}
  explicit Monomial(uint64_t key) : key_(key) {}

  static Monomial of(Var v, unsigned e);

  uint64_t key() const { return key_; }
  unsigned exponent(Var v) const;
  Monomial with_exponent(Var v, unsigned e) const;
  unsigned total_degree() const;
  bool is_constant() const { return key_ == 0; }

  // Component-wise sum; throws DegreeBoundExceeded past 10 bits per slot.
  Monomial operator*(const Monomial& o) const;
  // Component-wise difference; *ok=false when any exponent would go negative.
  Monomial divide(const Monomial& o, bool* ok) const;

  bool operator==(const Monomial& o) const { return key_ == o.key_; }

  std::string to_string() const;  // "t^2*lambda" style; "" for the constant

 private:
  uint64_t key_;
};

// Sparse multivariate polynomial over Rational with eagerly canonical form:
// zero coefficients are never stored and terms iterate in descending
// lexicographic order.
class MultiPoly {
 public:
  using TermMap = std::map<uint64_t, Rational, std::greater<uint64_t>>;

  MultiPoly() = default;

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v, unsigned e = 1);
  static MultiPoly term(const Rational& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (zero if absent).
  Rational constant_term() const;
  // Requires is_constant(); returns the value.
  Rational as_constant() const;

  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  int degree(Var v) const;   // -1 for the zero polynomial
  int total_degree() const;  // -1 for the zero polynomial
  bool depends_on(Var v) const { return degree(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  MultiPoly& operator*=(const Rational& c);
  MultiPoly pow(unsigned e) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Replaces v by an arbitrary polynomial.
  MultiPoly substitute(Var v, const MultiPoly& value) const;
  // Convenience: v := rational constant.
  MultiPoly evaluate(Var v, const Rational& value) const;
  // Terms whose v-exponent equals e, with that exponent stripped.
  MultiPoly coefficient_of(Var v, unsigned e) const;
  MultiPoly derivative(Var v) const;

  // Exact polynomial quotient; throws NonDivisible when b does not divide a.
  static MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);

  // Multiplies den through and returns a content-free pair (primitive part,
  // common rational factor); used when pretty-printing recovered values.
  std::string to_string() const;

  void add_term(const Rational& c, const Monomial& m);

 private:
  TermMap terms_;
};

// A polynomial divided by a power of lambda: num / lambda^denpow.
// The representation is normalized so lambda does not divide num
// (unless num == 0, in which case denpow == 0).
class LaurentInLambda {
 public:
  LaurentInLambda() : denpow_(0) {}
  LaurentInLambda(MultiPoly num, int denpow);

  static LaurentInLambda from_poly(const MultiPoly& p) { return {p, 0}; }
  // Substitutes t -> t / lambda^p into a polynomial.
  static LaurentInLambda scale_t(const MultiPoly& poly, int p);

  const MultiPoly& num() const { return num_; }
  int denpow() const { return denpow_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentInLambda operator-() const { return {-num_, denpow_}; }
  LaurentInLambda operator+(const LaurentInLambda& o) const;
  LaurentInLambda operator-(const LaurentInLambda& o) const { return *this + (-o); }
  LaurentInLambda operator*(const LaurentInLambda& o) const;
  bool operator==(const LaurentInLambda& o) const {
    return denpow_ == o.denpow_ && num_ == o.num_;
  }

  // Largest net lambda-degree over all terms (INT_MIN for zero).
  int top_net_degree() const;
  // The lambda -> infinity limit: the net-degree-zero part.  Throws
  // DivergentLimit if any term has positive net degree.
  MultiPoly limit_at_infinity() const;

  std::string to_string() const;

 private:
  MultiPoly num_;
  int denpow_;
};

}  // namespace liepres
