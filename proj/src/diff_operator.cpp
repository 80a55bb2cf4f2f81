#include "liepres/diff_operator.hpp"

#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

DiffOperator DiffOperator::term(const MultiPoly& coeff, int order) {
  if (order < 0) throw Error("DiffOperator: negative order");
  if (order > kOrderCap) {
    throw DegreeBoundExceeded("DiffOperator: order " + std::to_string(order) + " exceeds cap " +
                              std::to_string(kOrderCap));
  }
  DiffOperator d;
  if (!coeff.is_zero()) d.terms_.emplace(order, coeff);
  return d;
}

int DiffOperator::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

MultiPoly DiffOperator::coefficient(int order) const {
  auto it = terms_.find(order);
  return it == terms_.end() ? MultiPoly::zero() : it->second;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r;
  for (const auto& [k, g] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -g);
  return r;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [k, g] : o.terms_) {
    auto [it, inserted] = terms_.emplace(k, g);
    if (!inserted) {
      it->second += g;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) { return *this += -o; }

DiffOperator DiffOperator::scaled(const MultiPoly& c) const {
  DiffOperator r;
  if (c.is_zero()) return r;
  for (const auto& [k, g] : terms_) {
    MultiPoly prod = g * c;
    if (!prod.is_zero()) r.terms_.emplace_hint(r.terms_.end(), k, std::move(prod));
  }
  return r;
}

DiffOperator DiffOperator::compose(const DiffOperator& a, const DiffOperator& b) {
  // (f D^m) (g D^k) = f * sum_{j<=m} C(m,j) g^{(j)} D^{m-j+k}.
  DiffOperator r;
  for (const auto& [m, f] : a.terms_) {
    for (const auto& [k, g] : b.terms_) {
      if (m + k > kOrderCap) {
        throw DegreeBoundExceeded("DiffOperator::compose: order " + std::to_string(m + k) +
                                  " exceeds cap " + std::to_string(kOrderCap));
      }
      MultiPoly gj = g;           // j-th derivative of g
      Rational binom(1);          // C(m, j)
      for (int j = 0; j <= m; ++j) {
        if (gj.is_zero()) break;
        r += term(f * gj * binom, m - j + k);
        gj = gj.derivative(Var::u);
        binom *= Rational(m - j, j + 1);
      }
    }
  }
  return r;
}

DiffOperator DiffOperator::bracket(const DiffOperator& a, const DiffOperator& b) {
  return compose(a, b) - compose(b, a);
}

MultiPoly DiffOperator::apply(const MultiPoly& f) const {
  MultiPoly out;
  for (const auto& [k, g] : terms_) {
    MultiPoly d = f;
    for (int j = 0; j < k; ++j) d = d.derivative(Var::u);
    out += g * d;
  }
  return out;
}

DiffOperator DiffOperator::evaluate(Var v, const Rational& value) const {
  DiffOperator r;
  for (const auto& [k, g] : terms_) {
    MultiPoly e = g.evaluate(v, value);
    if (!e.is_zero()) r.terms_.emplace_hint(r.terms_.end(), k, std::move(e));
  }
  return r;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, g] = *it;
    if (!first) os << " + ";
    first = false;
    std::string coeff = g.to_string();
    bool needs_parens = g.term_count() > 1;
    if (k == 0) {
      os << (needs_parens ? "(" + coeff + ")" : coeff);
      continue;
    }
    if (coeff == "1") {
      os << "D";
    } else if (coeff == "-1") {
      os << "-D";
    } else {
      os << (needs_parens ? "(" + coeff + ")" : coeff) << "*D";
    }
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace liepres
