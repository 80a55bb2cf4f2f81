#include "liepres/multipoly.hpp"

#include <climits>
#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

namespace {
constexpr unsigned kBitsPerVar = 10;
constexpr uint64_t kSlotMask = (1ull << kBitsPerVar) - 1;

constexpr unsigned shift_of(Var v) {
  return kBitsPerVar * (kNumVars - 1 - static_cast<int>(v));
}
}  // namespace

const char* var_name(Var v) {
  static const char* names[kNumVars] = {"t", "lambda", "mu", "u", "q", "p"};
  return names[static_cast<int>(v)];
}

Monomial Monomial::of(Var v, unsigned e) {
  if (e > kMaxExponent) throw DegreeBoundExceeded("Monomial: exponent too large");
  return Monomial(static_cast<uint64_t>(e) << shift_of(v));
}

unsigned Monomial::exponent(Var v) const {
  return static_cast<unsigned>((key_ >> shift_of(v)) & kSlotMask);
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  if (e > kMaxExponent) throw DegreeBoundExceeded("Monomial: exponent too large");
  uint64_t cleared = key_ & ~(kSlotMask << shift_of(v));
  return Monomial(cleared | (static_cast<uint64_t>(e) << shift_of(v)));
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (int i = 0; i < kNumVars; ++i) d += exponent(static_cast<Var>(i));
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  uint64_t out = 0;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    unsigned e = exponent(v) + o.exponent(v);
    if (e > kMaxExponent) throw DegreeBoundExceeded("Monomial: exponent overflow in product");
    out |= static_cast<uint64_t>(e) << shift_of(v);
  }
  return Monomial(out);
}

Monomial Monomial::divide(const Monomial& o, bool* ok) const {
  uint64_t out = 0;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    unsigned a = exponent(v), b = o.exponent(v);
    if (a < b) {
      *ok = false;
      return Monomial();
    }
    out |= static_cast<uint64_t>(a - b) << shift_of(v);
  }
  *ok = true;
  return Monomial(out);
}

std::string Monomial::to_string() const {
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    unsigned e = exponent(v);
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += var_name(v);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly r;
  if (!c.is_zero()) r.terms_.emplace(0, c);
  return r;
}

MultiPoly MultiPoly::variable(Var v, unsigned e) {
  if (e == 0) return constant(1);
  MultiPoly r;
  r.terms_.emplace(Monomial::of(v, e).key(), Rational(1));
  return r;
}

MultiPoly MultiPoly::term(const Rational& c, const Monomial& m) {
  MultiPoly r;
  if (!c.is_zero()) r.terms_.emplace(m.key(), c);
  return r;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::as_constant() const {
  if (!is_constant()) throw Error("MultiPoly::as_constant on non-constant: " + to_string());
  return constant_term();
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    int e = static_cast<int>(Monomial(key).exponent(v));
    if (e > d) d = e;
  }
  return d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) {
    int e = static_cast<int>(Monomial(key).total_degree());
    if (e > d) d = e;
  }
  return d;
}

void MultiPoly::add_term(const Rational& c, const Monomial& m) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m.key(), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [key, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), key, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(c, Monomial(key));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(-c, Monomial(key));
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ka, ca] : terms_) {
    Monomial ma(ka);
    for (const auto& [kb, cb] : o.terms_) r.add_term(ca * cb, ma * Monomial(kb));
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1);
  MultiPoly base = *this;
  for (unsigned k = e; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  MultiPoly r;
  for (const auto& [key, c] : terms_) {
    Monomial m(key);
    unsigned e = m.exponent(v);
    MultiPoly piece = term(c, m.with_exponent(v, 0));
    if (e > 0) piece = piece * value.pow(e);
    r += piece;
  }
  return r;
}

MultiPoly MultiPoly::evaluate(Var v, const Rational& value) const {
  return substitute(v, constant(value));
}

MultiPoly MultiPoly::coefficient_of(Var v, unsigned e) const {
  MultiPoly r;
  for (const auto& [key, c] : terms_) {
    Monomial m(key);
    if (m.exponent(v) == e) r.add_term(c, m.with_exponent(v, 0));
  }
  return r;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly r;
  for (const auto& [key, c] : terms_) {
    Monomial m(key);
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    r.add_term(c * Rational(static_cast<long>(e)), m.with_exponent(v, e - 1));
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw NonDivisible("divide_exact: division by zero polynomial");
  MultiPoly rem = a;
  MultiPoly quot;
  const auto& blead = *b.terms_.begin();  // largest key = leading term
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    bool ok = false;
    Monomial qm = Monomial(rlead.first).divide(Monomial(blead.first), &ok);
    if (!ok) {
      throw NonDivisible("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
    }
    Rational qc = rlead.second / blead.second;
    MultiPoly qt = term(qc, qm);
    quot += qt;
    rem -= qt * b;
  }
  return quot;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational ac = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono = Monomial(key).to_string();
    if (mono.empty()) {
      os << ac.to_string();
    } else if (ac.is_one()) {
      os << mono;
    } else {
      os << ac.to_string() << "*" << mono;
    }
  }
  return os.str();
}

LaurentInLambda::LaurentInLambda(MultiPoly num, int denpow) : num_(std::move(num)), denpow_(denpow) {
  if (num_.is_zero()) {
    denpow_ = 0;
    return;
  }
  // Strip any common power of lambda into denpow.
  int minexp = INT_MAX;
  for (const auto& [key, c] : num_.terms()) {
    int e = static_cast<int>(Monomial(key).exponent(Var::lambda));
    if (e < minexp) minexp = e;
  }
  int shift = minexp;
  if (denpow_ < 0) {
    // Fold a negative denominator power into the numerator instead.
    shift = denpow_;
  } else if (shift > denpow_) {
    shift = denpow_;
  }
  if (shift != 0) {
    MultiPoly shifted;
    for (const auto& [key, c] : num_.terms()) {
      Monomial m(key);
      int e = static_cast<int>(m.exponent(Var::lambda)) - shift;
      shifted.add_term(c, m.with_exponent(Var::lambda, static_cast<unsigned>(e)));
    }
    num_ = shifted;
    denpow_ -= shift;
  }
}

LaurentInLambda LaurentInLambda::scale_t(const MultiPoly& poly, int p) {
  // t^e picks up lambda^{-p*e}; clear denominators by the largest power used.
  int dmax = 0;
  for (const auto& [key, c] : poly.terms()) {
    int d = p * static_cast<int>(Monomial(key).exponent(Var::t));
    if (d > dmax) dmax = d;
  }
  MultiPoly num;
  for (const auto& [key, c] : poly.terms()) {
    Monomial m(key);
    int d = p * static_cast<int>(m.exponent(Var::t));
    unsigned lam = m.exponent(Var::lambda) + static_cast<unsigned>(dmax - d);
    num.add_term(c, m.with_exponent(Var::lambda, lam));
  }
  return LaurentInLambda(std::move(num), dmax);
}

LaurentInLambda LaurentInLambda::operator+(const LaurentInLambda& o) const {
  int dp = std::max(denpow_, o.denpow_);
  MultiPoly a = num_ * MultiPoly::variable(Var::lambda, static_cast<unsigned>(dp - denpow_));
  MultiPoly b = o.num_ * MultiPoly::variable(Var::lambda, static_cast<unsigned>(dp - o.denpow_));
  return LaurentInLambda(a + b, dp);
}

LaurentInLambda LaurentInLambda::operator*(const LaurentInLambda& o) const {
  return LaurentInLambda(num_ * o.num_, denpow_ + o.denpow_);
}

int LaurentInLambda::top_net_degree() const {
  if (num_.is_zero()) return INT_MIN;
  return num_.degree(Var::lambda) - denpow_;
}

MultiPoly LaurentInLambda::limit_at_infinity() const {
  MultiPoly limit;
  for (const auto& [key, c] : num_.terms()) {
    Monomial m(key);
    int net = static_cast<int>(m.exponent(Var::lambda)) - denpow_;
    if (net > 0) {
      throw DivergentLimit("limit_at_infinity: term " + MultiPoly::term(c, m).to_string() +
                           " / lambda^" + std::to_string(denpow_) + " diverges");
    }
    if (net == 0) limit.add_term(c, m.with_exponent(Var::lambda, 0));
  }
  return limit;
}

std::string LaurentInLambda::to_string() const {
  if (denpow_ == 0) return num_.to_string();
  return "(" + num_.to_string() + ") / lambda^" + std::to_string(denpow_);
}

}  // namespace liepres
