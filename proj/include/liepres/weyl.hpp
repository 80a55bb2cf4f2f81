#pragma once

#include <memory>
#include <string>

#include "liepres/lie.hpp"

namespace liepres {

// Lie backend on polynomial-coefficient differential operators in u.  Spans
// and decompositions need exact rational coordinates, so the backend carries
// a generic specialization point for lambda (elements themselves stay formal;
// only `coordinates()` evaluates).
class WeylAlgebra : public LieAlgebra {
 public:
  explicit WeylAlgebra(std::string display_name = "weyl",
                       Rational lambda_value = Rational(355, 113));

  std::string name() const override { return name_; }
  Payload bracket_payload(const Payload& a, const Payload& b) const override;
  QVec to_coordinates(const Payload& a, const Rational& t_value) const override;
  Payload element_of_coordinate(int index) const override;  // u^m D^k

  const Rational& lambda_value() const { return lambda_value_; }

  LieElement element_d(int order) const;            // D^order
  LieElement element_u_power(int m, int k) const;   // u^m D^k
  LieElement make(const DiffOperator& op) const { return element(op); }

 private:
  std::string name_;
  Rational lambda_value_;
};

// x = u^2 D - (lambda-1) u, y = -D, h = [x,y] = 2uD - (lambda-1),
// z = t D^2 (kind "sl_lambda", k1 = 4) or t D^3 ("osp_lambda", k1 = 6).
// The adjoint action is locally finite, so z_{k1+1} = 0 holds here exactly
// as in the finite families; what never terminates is the iterated
// (ad z_1)-string, which is why no rank-indexed relation closes the list.
struct WeylRealization {
  std::string key;
  std::shared_ptr<const WeylAlgebra> algebra;
  GeneratorTriple triple;
};
WeylRealization weyl_generators(const std::string& key);  // throws UnknownType

// R(Delta) for Delta = 2(X+X- + X-X+) + H^2 composed in the operator
// algebra; must be the scalar operator lambda^2 - 1 (throws NotScalar).
MultiPoly casimir_image();

// Lie backend on even polynomials in q, p under
//   {f, g} = df/dp dg/dq - df/dq dg/dp,
// oriented so that x = p^2/2, y = -q^2/2, h = -pq satisfy [h,x] = 2x,
// [h,y] = -2y; the weight of q^a p^b is b - a.
class PoissonAlgebra : public LieAlgebra {
 public:
  PoissonAlgebra() = default;

  std::string name() const override { return "poisson"; }
  Payload bracket_payload(const Payload& a, const Payload& b) const override;
  QVec to_coordinates(const Payload& a, const Rational& t_value) const override;
  Payload element_of_coordinate(int index) const override;  // q^a p^b

  // Throws OddDegreeInput unless every monomial has even q+p degree.
  LieElement make(const MultiPoly& f) const;
};

MultiPoly poisson_bracket(const MultiPoly& f, const MultiPoly& g);

// x = p^2/2, y = -q^2/2, z = t q^4 (lowest vector of the degree-4 piece,
// k1 = 4, truncating).
struct PoissonRealization {
  std::shared_ptr<const PoissonAlgebra> algebra;
  GeneratorTriple triple;
};
PoissonRealization poisson_generators();

// Monomial basis of the even subalgebra through the degree bound: every
// q^a p^b with a+b even and a+b <= max_degree (degree 0 included).
std::vector<LieElement> poisson_monomials(const std::shared_ptr<const PoissonAlgebra>& algebra,
                                          int max_degree);

}  // namespace liepres
