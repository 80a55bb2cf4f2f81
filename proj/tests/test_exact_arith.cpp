#include <doctest.h>

#include "liepres/multipoly.hpp"
#include "liepres/errors.hpp"

using namespace liepres;

namespace {

MultiPoly T(long c = 1) { return MultiPoly::constant(Rational(c)) * MultiPoly::variable(Var::t); }
MultiPoly L() { return MultiPoly::variable(Var::lambda); }
MultiPoly C(long n) { return MultiPoly::constant(Rational(n)); }
MultiPoly C(long n, long d) { return MultiPoly::constant(Rational(n, d)); }

}  // namespace

TEST_CASE("rationals canonicalize aggressively") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(-2, -6) == Rational(1, 3));
  CHECK(Rational(2, -6) == Rational(-1, 3));
  CHECK(Rational("-4/6").to_string() == "-2/3");
  CHECK(Rational(7, 1).is_integer());
  CHECK((Rational(1, 3) + Rational(2, 3)).is_one());
  CHECK((Rational(1, 2) * Rational(2, 3)).to_string() == "1/3");
  CHECK((Rational(5) / Rational(10)).to_string() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(-3, 7).pow(3).to_string() == "-27/343");
  CHECK(Rational(0).pow(0).is_one());
}

TEST_CASE("rational ordering and height") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(-4));
  CHECK(Rational(1024).height_bits() == 11);
  CHECK(Rational(1, 1024).height_bits() == 11);
}

TEST_CASE("ring axioms hold on a pseudorandom sample") {
  // Deterministic LCG so the sample is reproducible.
  uint64_t state = 0x243F6A8885A308D3ull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  auto random_poly = [&]() {
    MultiPoly r;
    int nterms = 1 + static_cast<int>(next() % 4);
    for (int i = 0; i < nterms; ++i) {
      Monomial m = Monomial::of(Var::t, next() % 3) * Monomial::of(Var::lambda, next() % 3) *
                   Monomial::of(Var::u, next() % 2);
      long num = static_cast<long>(next() % 19) - 9;
      long den = 1 + static_cast<long>(next() % 5);
      r.add_term(Rational(num, den), m);
    }
    return r;
  };
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    CHECK((a - a).is_zero());
    CHECK(a * MultiPoly::constant(Rational(1)) == a);
    CHECK((a * MultiPoly::zero()).is_zero());
  }
}

TEST_CASE("canonical printing is stable and sorted") {
  MultiPoly p = C(24) * T().pow(2) * L().pow(2) - C(96) * T().pow(2);
  CHECK(p.to_string() == "24*t^2*lambda^2 - 96*t^2");
  CHECK(MultiPoly::zero().to_string() == "0");
  CHECK(C(-1, 2).to_string() == "-1/2");
  MultiPoly q = MultiPoly::variable(Var::u) - MultiPoly::variable(Var::q) * MultiPoly::variable(Var::p);
  CHECK(q.to_string() == "u - q*p");
  // Term order is lexicographic with t > lambda > mu > u > q > p.
  MultiPoly r = MultiPoly::variable(Var::p) + MultiPoly::variable(Var::t) + C(5);
  CHECK(r.to_string() == "t + p + 5");
}

TEST_CASE("substitution, coefficients, derivatives") {
  // (lambda - 1)^2 at lambda := mu + 1 gives mu^2.
  MultiPoly lm1 = L() - C(1);
  MultiPoly sub = (lm1 * lm1).substitute(Var::lambda, MultiPoly::variable(Var::mu) + C(1));
  CHECK(sub == MultiPoly::variable(Var::mu, 2));

  MultiPoly p = C(3) * T().pow(2) * L() + C(7) * T() - C(2);
  CHECK(p.coefficient_of(Var::t, 2) == C(3) * L());
  CHECK(p.coefficient_of(Var::t, 1) == C(7));
  CHECK(p.coefficient_of(Var::t, 0) == C(-2));
  CHECK(p.derivative(Var::t) == C(6) * T() * L() + C(7));
  CHECK(p.derivative(Var::q).is_zero());
  CHECK(p.degree(Var::t) == 2);
  CHECK(p.degree(Var::q) == 0);
  CHECK(MultiPoly::zero().degree(Var::t) == -1);
}

TEST_CASE("exact division succeeds exactly when it should") {
  MultiPoly a = (L() - C(2)) * (L() + C(2));
  CHECK(MultiPoly::divide_exact(a, L() - C(2)) == L() + C(2));
  MultiPoly big = C(432) * T().pow(2) * (L() * L() - C(4)) * (L() * L() - C(9));
  CHECK(MultiPoly::divide_exact(big, L() * L() - C(9)) == C(432) * T().pow(2) * (L() * L() - C(4)));
  CHECK_THROWS_AS(MultiPoly::divide_exact(L() * L() - C(5), L() - C(2)), NonDivisible);
  CHECK_THROWS_AS(MultiPoly::divide_exact(T(), L()), NonDivisible);
  CHECK(MultiPoly::divide_exact(MultiPoly::zero(), L()).is_zero());
  // Fractional leading coefficients are fine: (t/2) / (1/2) = t.
  CHECK(MultiPoly::divide_exact(C(1, 2) * T(), C(1, 2)) == T());
}

TEST_CASE("lambda-limits match the worked examples") {
  // (lambda^2 - 4) / lambda^2  ->  1
  LaurentInLambda a(L() * L() - C(4), 2);
  CHECK(a.limit_at_infinity() == C(1));
  // 24 t^2 (lambda^2 - 4) / lambda^2  ->  24 t^2
  LaurentInLambda b(C(24) * T().pow(2) * (L() * L() - C(4)), 2);
  CHECK(b.limit_at_infinity() == C(24) * T().pow(2));
  // 432 t^2 (lambda^2 - 4)(lambda^2 - 9) / lambda^4  ->  432 t^2
  LaurentInLambda c(C(432) * T().pow(2) * (L() * L() - C(4)) * (L() * L() - C(9)), 4);
  CHECK(c.limit_at_infinity() == C(432) * T().pow(2));
  // lambda^3 / lambda^2 diverges.
  LaurentInLambda d(L().pow(3), 2);
  CHECK_THROWS_AS(d.limit_at_infinity(), DivergentLimit);
  // Strictly negative net degree vanishes in the limit.
  LaurentInLambda e(L() - C(7), 2);
  CHECK(e.limit_at_infinity().is_zero());
}

TEST_CASE("lambda-free polynomials are fixed points of the limit") {
  MultiPoly p = C(5) * T().pow(3) - C(2, 3) * T();
  CHECK(LaurentInLambda::from_poly(p).limit_at_infinity() == p);
}

TEST_CASE("scale_t implements t -> t/lambda^p") {
  // 24 t^2 (lambda^2-4) with p=1: picks up lambda^{-2}, limit 24 t^2.
  MultiPoly p = C(24) * T().pow(2) * (L() * L() - C(4));
  LaurentInLambda s = LaurentInLambda::scale_t(p, 1);
  CHECK(s.limit_at_infinity() == C(24) * T().pow(2));
  // 3 (a plain constant) is untouched.
  LaurentInLambda c = LaurentInLambda::scale_t(C(3), 1);
  CHECK(c.limit_at_infinity() == C(3));
  // t with p=2 has net degree -2: vanishes.
  LaurentInLambda v = LaurentInLambda::scale_t(T(), 2);
  CHECK(v.limit_at_infinity().is_zero());
  CHECK(v.top_net_degree() == -2);
  // 72 t (lambda^2 - 19) with p=2: net degree 0 from the lambda^2 term.
  LaurentInLambda w = LaurentInLambda::scale_t(C(72) * T() * (L() * L() - C(19)), 2);
  CHECK(w.limit_at_infinity() == C(72) * T());
}

TEST_CASE("laurent arithmetic normalizes the representation") {
  LaurentInLambda a(L().pow(2) * T(), 2);  // = t
  CHECK(a.denpow() == 0);
  CHECK(a.num() == T());
  LaurentInLambda b = LaurentInLambda(T(), 1) + LaurentInLambda(T() * L(), 1);
  // t/lambda + t: mixed net degrees, top is 0.
  CHECK(b.top_net_degree() == 0);
  CHECK(b.limit_at_infinity() == T());
  LaurentInLambda prod = LaurentInLambda(L(), 0) * LaurentInLambda(C(1), 1);
  CHECK(prod.denpow() == 0);
  CHECK(prod.num() == C(1));
}

TEST_CASE("monomial packing guards its exponent budget") {
  CHECK_THROWS_AS(Monomial::of(Var::t, 2000), DegreeBoundExceeded);
  Monomial m = Monomial::of(Var::t, 1000);
  CHECK_THROWS_AS(m * m, DegreeBoundExceeded);
  CHECK(Monomial::of(Var::p, 3).exponent(Var::p) == 3);
  CHECK(Monomial::of(Var::p, 3).exponent(Var::q) == 0);
}
