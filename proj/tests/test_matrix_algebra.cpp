#include <doctest.h>

#include "liepres/errors.hpp"
#include "liepres/matrix_algebra.hpp"
#include "liepres/span.hpp"

using namespace liepres;

namespace {

MultiPoly C(long v) { return MultiPoly::constant(Rational(v)); }
MultiPoly T() { return MultiPoly::variable(Var::t); }

std::vector<LieElement> seeds(const ClassicalRealization& r, bool with_z = true) {
  std::vector<LieElement> s{r.triple.x(), r.triple.y()};
  if (with_z) s.push_back(r.triple.z());
  return s;
}

std::vector<SparseMatrix> span_matrices(const SpanResult& span) {
  std::vector<SparseMatrix> out;
  for (const LieElement& e : span.basis) {
    out.push_back(std::get<SparseMatrix>(e.payload()).evaluate(Var::t, Rational(1)));
  }
  return out;
}

}  // namespace

TEST_CASE("elementary matrix products obey E_ab E_cd = delta_bc E_ad") {
  const int n = 5;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      for (int c = 1; c <= n; ++c) {
        for (int d = 1; d <= n; ++d) {
          SparseMatrix prod = SparseMatrix::unit(n, a, b) * SparseMatrix::unit(n, c, d);
          if (b == c) {
            CHECK(prod == SparseMatrix::unit(n, a, d));
          } else {
            CHECK(prod.is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("matrix bracket is antisymmetric and satisfies Jacobi") {
  uint64_t state = 0xDEADBEEFCAFEF00Dull;
  auto next = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  };
  auto random_matrix = [&]() {
    SparseMatrix m(4);
    for (int k = 0; k < 5; ++k) {
      m.add(1 + next() % 4, 1 + next() % 4, C(static_cast<long>(next() % 11) - 5));
    }
    return m;
  };
  for (int trial = 0; trial < 25; ++trial) {
    SparseMatrix a = random_matrix(), b = random_matrix(), c = random_matrix();
    CHECK(SparseMatrix::bracket(a, b) == -SparseMatrix::bracket(b, a));
    SparseMatrix jac = SparseMatrix::bracket(a, SparseMatrix::bracket(b, c)) +
                       SparseMatrix::bracket(b, SparseMatrix::bracket(c, a)) +
                       SparseMatrix::bracket(c, SparseMatrix::bracket(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("size mismatches are rejected") {
  SparseMatrix a(3), b(4);
  CHECK_THROWS_AS(a += b, SizeMismatch);
  CHECK_THROWS_AS(a * b, SizeMismatch);
  CHECK_THROWS_AS(a.set(4, 1, C(1)), SizeMismatch);
}

TEST_CASE("sl(3) generators come out exactly as specified") {
  auto r = classical_generators(ClassicalFamily::sl, 3);
  SparseMatrix x = std::get<SparseMatrix>(r.triple.x().payload());
  SparseMatrix y = std::get<SparseMatrix>(r.triple.y().payload());
  SparseMatrix z = std::get<SparseMatrix>(r.triple.z().payload());
  SparseMatrix ex(3), ey(3), ez(3);
  ex.add(1, 2, C(2));
  ex.add(2, 3, C(2));
  ey.add(2, 1, C(1));
  ey.add(3, 2, C(1));
  ez.add(3, 1, T());
  CHECK(x == ex);
  CHECK(y == ey);
  CHECK(z == ez);
  // h = [x,y] is the principal coweight diag(2, 0, -2).
  SparseMatrix h = std::get<SparseMatrix>(r.triple.h().payload());
  SparseMatrix eh(3);
  eh.add(1, 1, C(2));
  eh.add(3, 3, C(-2));
  CHECK(h == eh);
}

TEST_CASE("sp(6) x-generator carries the 9 E_{3,6} corner term") {
  auto r = classical_generators(ClassicalFamily::sp, 3);
  SparseMatrix x = std::get<SparseMatrix>(r.triple.x().payload());
  CHECK(x.entry(3, 6) == C(9));
  CHECK(x.entry(1, 2) == C(5));
  CHECK(x.entry(2, 3) == C(8));
  CHECK(x.entry(5, 4) == C(-5));
  CHECK(x.entry(6, 5) == C(-8));
}

TEST_CASE("o(8) z-generator is the 1/6! corner combination") {
  auto r = classical_generators(ClassicalFamily::o_even, 4);
  SparseMatrix z = std::get<SparseMatrix>(r.triple.z().payload());
  MultiPoly s = T() * MultiPoly::constant(Rational(1, 720));
  CHECK(z.entry(4, 1) == s);
  CHECK(z.entry(5, 8) == -s);
  CHECK(z.entry(5, 4) == s);
  CHECK(z.entry(8, 1) == -s);
  CHECK(z.entry_count() == 4);
}

TEST_CASE("every classical triple verifies its defining relations on construction") {
  // The GeneratorTriple constructor checks [[x,y],x]=2x, [[x,y],y]=-2y,
  // [y,z]=0, [[x,y],z]=-k1 z and (ad x)^{k1+1} z = 0; reaching the CHECK
  // lines means all of that held with t formal.
  for (int n = 3; n <= 8; ++n) {
    auto r = classical_generators(ClassicalFamily::sl, n);
    CHECK(r.triple.k1() == 4);
  }
  for (int n = 3; n <= 6; ++n) {
    CHECK(classical_generators(ClassicalFamily::o_odd, n).triple.k1() == 6);
    CHECK(classical_generators(ClassicalFamily::sp, n).triple.k1() == 6);
  }
  for (int n = 4; n <= 6; ++n) {
    CHECK(classical_generators(ClassicalFamily::o_even, n).triple.k1() == 2 * n - 2);
  }
}

TEST_CASE("tampered generators are rejected with WeightMismatch") {
  auto r = classical_generators(ClassicalFamily::sl, 4);
  auto algebra = r.algebra;
  SparseMatrix bad_z(4);
  bad_z.add(3, 1, T());  // missing the E_{4,2} partner: [y,z] != 0
  CHECK_THROWS_AS(GeneratorTriple(r.triple.x(), r.triple.y(), algebra->matrix(bad_z), 4, true),
                  WeightMismatch);
  // Wrong weight: z with k1=6 claimed.
  CHECK_THROWS_AS(GeneratorTriple(r.triple.x(), r.triple.y(), r.triple.z(), 6, true),
                  WeightMismatch);
}

TEST_CASE("family constructors reject too-small parameters") {
  CHECK_THROWS_AS(classical_generators(ClassicalFamily::sl, 2), RankTooSmall);
  CHECK_THROWS_AS(classical_generators(ClassicalFamily::o_odd, 2), RankTooSmall);
  CHECK_THROWS_AS(classical_generators(ClassicalFamily::sp, 2), RankTooSmall);
  CHECK_THROWS_AS(classical_generators(ClassicalFamily::o_even, 3), RankTooSmall);
}

TEST_CASE("family keys round-trip and unknown keys throw") {
  CHECK(family_from_key("sl") == ClassicalFamily::sl);
  CHECK(family_from_key("o_even") == ClassicalFamily::o_even);
  CHECK_THROWS_AS(family_from_key("e9"), UnknownType);
}

TEST_CASE("frozen invariant forms agree with the solved ones") {
  struct Probe { ClassicalFamily f; int n; };
  for (Probe pr : {Probe{ClassicalFamily::o_odd, 3}, Probe{ClassicalFamily::o_odd, 5},
                   Probe{ClassicalFamily::sp, 3}, Probe{ClassicalFamily::sp, 5},
                   Probe{ClassicalFamily::o_even, 4}, Probe{ClassicalFamily::o_even, 6}}) {
    CHECK(recover_invariant_form_for(pr.f, pr.n) == frozen_invariant_form(pr.f, pr.n));
  }
}

TEST_CASE("spanned algebras preserve their frozen form; sl with a fake form fails") {
  auto r = classical_generators(ClassicalFamily::o_odd, 3);
  SpanResult span = span_closure(seeds(r));
  CHECK(span.dim() == 21);
  std::string why;
  CHECK(form_invariance_check(span_matrices(span), r.invariant_form, &why));

  auto s = classical_generators(ClassicalFamily::sl, 3);
  SpanResult sl_span = span_closure(seeds(s));
  CHECK_FALSE(form_invariance_check(span_matrices(sl_span), SparseMatrix::identity(3), &why));
  CHECK(!why.empty());
}

TEST_CASE("span closure reaches the full algebra dimension") {
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::sl, 3))).dim() == 8);
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::sl, 5))).dim() == 24);
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::o_odd, 4))).dim() == 36);
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::sp, 4))).dim() == 36);
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::o_even, 4))).dim() == 28);
  // x and y alone span the principal sl2, which is already closed...
  CHECK(span_closure(seeds(classical_generators(ClassicalFamily::sl, 4), false)).dim() == 3);
  // ...whereas the pair (x, z) generates all of sl(n): y is auxiliary.
  auto r4 = classical_generators(ClassicalFamily::sl, 4);
  CHECK(span_closure({r4.triple.x(), r4.triple.z()}).dim() == 15);
  auto r6 = classical_generators(ClassicalFamily::sl, 6);
  CHECK(span_closure({r6.triple.x(), r6.triple.z()}).dim() == 35);
}

TEST_CASE("adjoint decomposition recovers the classical spectra") {
  auto check_spectrum = [](ClassicalFamily f, int n, const std::string& expected) {
    auto r = classical_generators(f, n);
    SpanResult span = span_closure({r.triple.x(), r.triple.y(), r.triple.z()});
    DecompositionReport rep = decompose_adjoint(r.triple, span);
    CHECK(rep.spectrum_string() == expected);
    CHECK(rep.total_dim == static_cast<size_t>(classical_dimension(f, n)));
  };
  check_spectrum(ClassicalFamily::sl, 3, "2, 4");
  check_spectrum(ClassicalFamily::sl, 5, "2, 4, 6, 8");
  check_spectrum(ClassicalFamily::o_odd, 3, "2, 6, 10");
  check_spectrum(ClassicalFamily::sp, 3, "2, 6, 10");
  // o(8) doubles L^6: the chain summand and the extra 2n-2 one coincide.
  check_spectrum(ClassicalFamily::o_even, 4, "2, 6, 6, 10");
  check_spectrum(ClassicalFamily::o_even, 5, "2, 6, 8, 10, 14");
}

TEST_CASE("elements of different backend instances refuse to combine") {
  auto a = classical_generators(ClassicalFamily::sl, 3);
  auto b = classical_generators(ClassicalFamily::sl, 3);  // distinct instance
  CHECK_THROWS_AS(bracket(a.triple.x(), b.triple.y()), BackendMismatch);
  CHECK_THROWS_AS(a.triple.x() + b.triple.x(), BackendMismatch);
  auto c = classical_generators(ClassicalFamily::sl, 4);
  CHECK_THROWS_AS(a.triple.x() + c.triple.x(), BackendMismatch);
}
