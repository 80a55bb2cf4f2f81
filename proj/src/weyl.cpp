#include "liepres/weyl.hpp"

#include "liepres/errors.hpp"

namespace liepres {

namespace {

constexpr int kIndexStride = 1024;

const DiffOperator& get_op(const Payload& a, const std::string& who) {
  const auto* op = std::get_if<DiffOperator>(&a);
  if (op == nullptr) throw BackendMismatch(who + ": expects differential-operator elements");
  return *op;
}

const MultiPoly& get_poly(const Payload& a, const std::string& who) {
  const auto* f = std::get_if<MultiPoly>(&a);
  if (f == nullptr) throw BackendMismatch(who + ": expects polynomial elements");
  return *f;
}

}  // namespace

WeylAlgebra::WeylAlgebra(std::string display_name, Rational lambda_value)
    : name_(std::move(display_name)), lambda_value_(std::move(lambda_value)) {}

Payload WeylAlgebra::bracket_payload(const Payload& a, const Payload& b) const {
  return DiffOperator::bracket(get_op(a, name_), get_op(b, name_));
}

QVec WeylAlgebra::to_coordinates(const Payload& a, const Rational& t_value) const {
  const DiffOperator& op = get_op(a, name_);
  QVec out;
  for (const auto& [order, coeff] : op.terms()) {
    MultiPoly f = coeff.evaluate(Var::t, t_value).evaluate(Var::lambda, lambda_value_);
    for (const auto& [key, c] : f.terms()) {
      Monomial m(key);
      const unsigned upow = m.exponent(Var::u);
      if (m.with_exponent(Var::u, 0).key() != 0) {
        throw Error(name_ + ": stray indeterminate in operator coefficient: " + f.to_string());
      }
      if (upow >= kIndexStride) throw DegreeBoundExceeded(name_ + ": u-degree too large");
      out[order * kIndexStride + static_cast<int>(upow)] = c;
    }
  }
  return out;
}

Payload WeylAlgebra::element_of_coordinate(int index) const {
  if (index < 0) throw Error(name_ + ": coordinate index out of range");
  const int order = index / kIndexStride;
  const int upow = index % kIndexStride;
  return DiffOperator::term(MultiPoly::variable(Var::u, static_cast<unsigned>(upow)), order);
}

LieElement WeylAlgebra::element_d(int order) const {
  return element(DiffOperator::term(MultiPoly::constant(Rational(1)), order));
}

LieElement WeylAlgebra::element_u_power(int m, int k) const {
  return element(DiffOperator::term(MultiPoly::variable(Var::u, static_cast<unsigned>(m)), k));
}

WeylRealization weyl_generators(const std::string& key) {
  int z_order = 0;
  int k1 = 0;
  std::string display;
  if (key == "sl_lambda") {
    z_order = 2;
    k1 = 4;
    display = "sl(lambda)";
  } else if (key == "osp_lambda") {
    z_order = 3;
    k1 = 6;
    display = "o/sp(lambda)";
  } else {
    throw UnknownType("no operator realization for '" + key + "'");
  }
  auto algebra = std::make_shared<WeylAlgebra>(display);
  const MultiPoly lam = MultiPoly::variable(Var::lambda);
  const MultiPoly one = MultiPoly::constant(Rational(1));
  DiffOperator x_op = DiffOperator::term(MultiPoly::variable(Var::u, 2), 1) -
                      DiffOperator::term((lam - one) * MultiPoly::variable(Var::u), 0);
  DiffOperator y_op = -DiffOperator::term(one, 1);
  // z is a lowest-weight vector fixed only up to scalar.  The o/sp family's
  // relation table is computed in the normalization z = -t d^3/du^3: with
  // +t d^3/du^3 every type-2/3 relation with odd z-count imbalance flips
  // sign, while the sl family is insensitive (even imbalance throughout).
  DiffOperator z_op = DiffOperator::term(MultiPoly::variable(Var::t), z_order);
  if (z_order == 3) z_op = -z_op;
  GeneratorTriple triple(algebra->element(x_op), algebra->element(y_op), algebra->element(z_op),
                         k1, /*truncating=*/true);
  return WeylRealization{key, algebra, std::move(triple)};
}

MultiPoly casimir_image() {
  const MultiPoly lam = MultiPoly::variable(Var::lambda);
  const MultiPoly one = MultiPoly::constant(Rational(1));
  DiffOperator xp = DiffOperator::term(MultiPoly::variable(Var::u, 2), 1) -
                    DiffOperator::term((lam - one) * MultiPoly::variable(Var::u), 0);
  DiffOperator xm = -DiffOperator::term(one, 1);
  DiffOperator h = DiffOperator::bracket(xp, xm);
  DiffOperator delta =
      (DiffOperator::compose(xp, xm) + DiffOperator::compose(xm, xp)).scaled(
          MultiPoly::constant(Rational(2))) +
      DiffOperator::compose(h, h);
  if (delta.order() != 0) throw NotScalar("Casimir image has positive operator order");
  MultiPoly value = delta.coefficient(0);
  if (value.depends_on(Var::u)) throw NotScalar("Casimir image depends on u");
  return value;
}

MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g) {
  return f.derivative(Var::p) * g.derivative(Var::q) -
         f.derivative(Var::q) * g.derivative(Var::p);
}

namespace {

void check_even(const MultiPoly& f, const char* who) {
  for (const auto& [key, c] : f.terms()) {
    (void)c;
    Monomial m(key);
    if ((m.exponent(Var::q) + m.exponent(Var::p)) % 2 != 0) {
      throw OddDegreeInput(std::string(who) + ": monomial of odd q,p-degree: " + m.to_string());
    }
  }
}

}  // namespace

Payload PoissonAlgebra::bracket_payload(const Payload& a, const Payload& b) const {
  const MultiPoly& f = get_poly(a, name());
  const MultiPoly& g = get_poly(b, name());
  check_even(f, "poisson bracket");
  check_even(g, "poisson bracket");
  return poisson_bracket(f, g);
}

QVec PoissonAlgebra::to_coordinates(const Payload& a, const Rational& t_value) const {
  const MultiPoly f = get_poly(a, name()).evaluate(Var::t, t_value);
  QVec out;
  for (const auto& [key, c] : f.terms()) {
    Monomial m(key);
    const unsigned qe = m.exponent(Var::q);
    const unsigned pe = m.exponent(Var::p);
    if (m.with_exponent(Var::q, 0).with_exponent(Var::p, 0).key() != 0) {
      throw Error(name() + ": stray indeterminate in Poisson element: " + f.to_string());
    }
    if (qe >= kIndexStride || pe >= kIndexStride) {
      throw DegreeBoundExceeded(name() + ": q/p degree too large");
    }
    out[static_cast<int>(qe) * kIndexStride + static_cast<int>(pe)] = c;
  }
  return out;
}

Payload PoissonAlgebra::element_of_coordinate(int index) const {
  if (index < 0) throw Error(name() + ": coordinate index out of range");
  Monomial m = Monomial::of(Var::q, static_cast<unsigned>(index / kIndexStride)) *
               Monomial::of(Var::p, static_cast<unsigned>(index % kIndexStride));
  return MultiPoly::term(Rational(1), m);
}

LieElement PoissonAlgebra::make(const MultiPoly& f) const {
  check_even(f, "poisson element");
  return element(f);
}

PoissonRealization poisson_generators() {
  auto algebra = std::make_shared<PoissonAlgebra>();
  LieElement x = algebra->make(MultiPoly::variable(Var::p, 2) * Rational(1, 2));
  LieElement y = algebra->make(MultiPoly::variable(Var::q, 2) * Rational(-1, 2));
  LieElement z =
      algebra->make(MultiPoly::variable(Var::t) * MultiPoly::variable(Var::q, 4));
  GeneratorTriple triple(x, y, z, 4, /*truncating=*/true);
  return PoissonRealization{algebra, std::move(triple)};
}

std::vector<LieElement> poisson_monomials(const std::shared_ptr<const PoissonAlgebra>& algebra,
                                          int max_degree) {
  std::vector<LieElement> out;
  for (int d = 0; d <= max_degree; d += 2) {
    for (int a = 0; a <= d; ++a) {
      Monomial m = Monomial::of(Var::q, static_cast<unsigned>(a)) *
                   Monomial::of(Var::p, static_cast<unsigned>(d - a));
      out.push_back(algebra->element(MultiPoly::term(Rational(1), m)));
    }
  }
  return out;
}

}  // namespace liepres
