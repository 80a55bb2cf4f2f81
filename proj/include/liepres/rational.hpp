#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "liepres/errors.hpp"

namespace liepres {

// Arbitrary-precision rational number, always stored canonically
// (coprime numerator/denominator, positive denominator).
//
// mpq_class does not canonicalize on construction from a fraction, so the
// two-argument constructor and the string constructor do it explicitly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int->Q
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw Error("Rational: zero denominator");
    v_.canonicalize();
  }
  // Accepts "123", "-4/6" (canonicalized to -2/3).
  explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

  static Rational from_mpq(const mpq_class& q) {
    Rational r;
    r.v_ = q;
    r.v_.canonicalize();
    return r;
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return from_mpq(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return from_mpq(::abs(v_)); }

  Rational pow(unsigned e) const {
    mpq_class r = 1;
    mpq_class base = v_;
    for (unsigned k = e; k > 0; k >>= 1) {
      if (k & 1) r *= base;
      if (k > 1) base *= base;
    }
    return from_mpq(r);
  }

  // Bit length of the largest of |numerator|, denominator; a cheap height
  // proxy used by diagnostic residual summaries.
  size_t height_bits() const {
    size_t a = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
    size_t b = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
    return a > b ? a : b;
  }

  std::string to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

}  // namespace liepres
